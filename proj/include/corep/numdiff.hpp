#ifndef COREP_NUMDIFF_HPP
#define COREP_NUMDIFF_HPP

#include "corep/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace corep {

/// Fourth-order central difference of a matrix-valued function of one real
/// variable at t = 0:  (f(-2h) - 8 f(-h) + 8 f(h) - f(2h)) / 12h.
template <typename Real, typename F>
CMatrix<Real> central_difference4(F &&f, Real h)
{
  const CMatrix<Real> fm2 = f(-2 * h);
  const CMatrix<Real> fm1 = f(-h);
  const CMatrix<Real> fp1 = f(h);
  const CMatrix<Real> fp2 = f(2 * h);
  return ((fm2 - fp2) + Complex<Real>(8) * (fp1 - fm1)) / Complex<Real>(12 * h);
}

/// Derivative at t = 0 by fourth-order central differences with one level
/// of Richardson extrapolation (steps h and h/2). Throws when the step
/// underflows or the two levels disagree by more than `conv_tol` relative.
template <typename Real, typename F>
CMatrix<Real> richardson_derivative(F &&f, Real h, double conv_tol = 1e-6)
{
  if (!std::isfinite(h) || !(h > 0))
    throw DifferentiationError("numerical differentiation: step must be positive and finite");
  if (h / 2 < std::numeric_limits<Real>::min() || (Real(1) + h / 2) == Real(1))
    throw DifferentiationError("numerical differentiation: step underflow (h = " + std::to_string(double(h)) + ")");
  const CMatrix<Real> coarse = central_difference4<Real>(f, h);
  const CMatrix<Real> fine = central_difference4<Real>(f, h / 2);
  if (!all_finite(coarse) || !all_finite(fine))
    throw DifferentiationError("numerical differentiation: non-finite difference quotient");
  const Real scale = std::max<Real>(Real(1), max_abs(fine));
  const Real change = max_abs(CMatrix<Real>(fine - coarse));
  if (change > Real(conv_tol) * scale)
    throw DifferentiationError("numerical differentiation did not converge: levels differ by " +
                               std::to_string(double(change)));
  return (Complex<Real>(16) * fine - coarse) / Complex<Real>(15);
}

} // namespace corep

#endif // COREP_NUMDIFF_HPP
