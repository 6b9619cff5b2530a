#ifndef COREP_GROUP_CORE_HPP
#define COREP_GROUP_CORE_HPP

#include "corep/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace corep {

/// An element of G + a0 G: an invertible matrix together with a flag saying
/// whether it acts linearly or antilinearly (D(a) v = A conj(v)).
template <typename Real>
class GroupElement {
public:
  GroupElement(CMatrix<Real> matrix, Linearity linearity, double rank_tol = 1e-10)
      : m_matrix(std::move(matrix)), m_linearity(linearity)
  {
    if (!is_square(m_matrix))
      throw DimensionError("group element matrix must be square");
    if (!all_finite(m_matrix))
      throw InvalidArgument("group element matrix has non-finite entries");
    if (!is_invertible(m_matrix, rank_tol))
      throw SingularMatrix("group element matrix is not invertible");
  }

  const CMatrix<Real> &matrix() const { return m_matrix; }
  Linearity linearity() const { return m_linearity; }
  bool is_antilinear() const { return m_linearity == Linearity::antilinear; }
  Eigen::Index dim() const { return m_matrix.rows(); }

private:
  CMatrix<Real> m_matrix;
  Linearity m_linearity;
};

/// Product a * b. An antilinear left factor conjugates everything to its
/// right, so its matrix multiplies conj(b.matrix).
template <typename Real>
GroupElement<Real> compose(const GroupElement<Real> &a, const GroupElement<Real> &b)
{
  if (a.dim() != b.dim())
    throw DimensionError("compose: dimension mismatch");
  CMatrix<Real> m = a.is_antilinear() ? CMatrix<Real>(a.matrix() * b.matrix().conjugate())
                                      : CMatrix<Real>(a.matrix() * b.matrix());
  const auto flag = (a.is_antilinear() != b.is_antilinear()) ? Linearity::antilinear : Linearity::linear;
  return GroupElement<Real>(std::move(m), flag, 0.0);
}

/// The linear subgroup G: n real parameters and the n generator matrices of
/// a d-dimensional irrep.
template <typename Real>
class LieGroupSpec {
public:
  LieGroupSpec(std::string name, std::vector<CMatrix<Real>> generators, double rank_tol = 1e-8)
      : m_name(std::move(name)), m_generators(std::move(generators))
  {
    if (m_generators.empty())
      throw InvalidArgument("Lie group '" + m_name + "' needs at least one generator");
    const auto d = m_generators.front().rows();
    for (std::size_t k = 0; k < m_generators.size(); ++k) {
      const auto &x = m_generators[k];
      if (!is_square(x) || x.rows() != d)
        throw DimensionError("generator " + std::to_string(k + 1) + " of '" + m_name +
                             "' is not " + std::to_string(d) + "x" + std::to_string(d));
      if (!all_finite(x))
        throw InvalidArgument("generator " + std::to_string(k + 1) + " has non-finite entries");
    }
    const auto info = real_rank<Real>(m_generators, rank_tol);
    if (info.rank != n())
      throw InvalidArgument("generators of '" + m_name + "' are not real-linearly independent (rank " +
                            std::to_string(info.rank) + " < " + std::to_string(n()) + ")");
  }

  const std::string &name() const { return m_name; }
  int n() const { return static_cast<int>(m_generators.size()); }
  int d() const { return static_cast<int>(m_generators.front().rows()); }
  const std::vector<CMatrix<Real>> &generators() const { return m_generators; }
  /// Zero-based index.
  const CMatrix<Real> &generator(int sigma) const { return m_generators.at(static_cast<std::size_t>(sigma)); }

private:
  std::string m_name;
  std::vector<CMatrix<Real>> m_generators;
};

/// The antilinear generator a0 = (N, antilinear) together with the declared
/// sign s of a0^2, the phase xi (mu/lambda = e^{i xi}), the coset parameter
/// alpha0 and the infinitesimal shift delta_alpha0 used by transport.
template <typename Real>
struct AntilinearExtension {
  CMatrix<Real> N;
  int s = 1;
  Real xi = 0;
  Real alpha0 = 0;
  Real delta_alpha0 = 0;

  AntilinearExtension(CMatrix<Real> n_matrix, int sign, Real phase = 0, Real coset_alpha0 = 0,
                      Real shift = 0, double rank_tol = 1e-10)
      : N(std::move(n_matrix)), s(sign), xi(phase), alpha0(coset_alpha0), delta_alpha0(shift)
  {
    if (s != 1 && s != -1)
      throw InvalidArgument("a0^2 sign must be +1 or -1");
    if (!is_square(N))
      throw DimensionError("N must be square");
    if (!all_finite(N) || !std::isfinite(xi) || !std::isfinite(alpha0) || !std::isfinite(delta_alpha0))
      throw InvalidArgument("extension has non-finite entries");
    if (!is_invertible(N, rank_tol))
      throw SingularMatrix("N is not invertible");
  }

  int d() const { return static_cast<int>(N.rows()); }
  GroupElement<Real> a0() const { return GroupElement<Real>(N, Linearity::antilinear, 0.0); }
};

/// One point of the parametrized subgroup: exp(sum_sigma alpha_sigma X_sigma).
template <typename Real>
GroupElement<Real> exp_curve(const LieGroupSpec<Real> &spec, const RVector<Real> &alpha)
{
  if (alpha.size() != spec.n())
    throw DimensionError("exp_curve: expected " + std::to_string(spec.n()) + " parameters, got " +
                         std::to_string(alpha.size()));
  CMatrix<Real> sum = CMatrix<Real>::Zero(spec.d(), spec.d());
  for (int k = 0; k < spec.n(); ++k)
    sum += Complex<Real>(alpha(k)) * spec.generator(k);
  return GroupElement<Real>(matrix_exp(sum), Linearity::linear, 0.0);
}

/// Sign of a0^2 = (N, antilinear) o (N, antilinear) = (N conj(N), linear).
template <typename Real>
int a0_square_sign(const AntilinearExtension<Real> &ext, double tol = 1e-10)
{
  const auto sq = compose(ext.a0(), ext.a0());
  const auto e = identity<Real>(ext.d());
  if (approx_equal(sq.matrix(), e, tol))
    return 1;
  if (approx_equal(sq.matrix(), CMatrix<Real>(-e), tol))
    return -1;
  throw InconsistentExtension("inconsistent extension: N conj(N) is not +/-E (max deviation from +E " +
                              std::to_string(double(max_abs(CMatrix<Real>(sq.matrix() - e)))) + ")");
}

/// a-type when N conj(N) = s E, b-type when N conj(N) = -s E.
template <typename Real>
CoirrepType classify_coirrep(const AntilinearExtension<Real> &ext, double tol = 1e-10)
{
  const int sign = a0_square_sign(ext, tol);
  return sign == ext.s ? CoirrepType::a : CoirrepType::b;
}

template <typename Real>
CoirrepType classify_coirrep(const LieGroupSpec<Real> &spec, const AntilinearExtension<Real> &ext,
                             double tol = 1e-10)
{
  if (spec.d() != ext.d())
    throw DimensionError("extension N is " + std::to_string(ext.d()) + "x" + std::to_string(ext.d()) +
                         " but the irrep has dimension " + std::to_string(spec.d()));
  return classify_coirrep(ext, tol);
}

} // namespace corep

#endif // COREP_GROUP_CORE_HPP
