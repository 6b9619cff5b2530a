#ifndef COREP_TYPES_HPP
#define COREP_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace corep {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

enum class Linearity { linear, antilinear };

enum class CoirrepType { a, b };

/// Base point at which coordinates or vector-field coefficients are expressed.
enum class Frame { y_original, x, x_prime };

inline std::string_view to_string(Linearity l)
{
  return l == Linearity::linear ? "linear" : "antilinear";
}

inline std::string_view to_string(CoirrepType t)
{
  return t == CoirrepType::a ? "a" : "b";
}

inline std::string_view to_string(Frame f)
{
  switch (f) {
  case Frame::y_original: return "y-original";
  case Frame::x: return "x";
  case Frame::x_prime: return "x'";
  }
  return "?";
}

/// Numerical thresholds shared by every stage.
struct Tolerances {
  double equality = 1e-10;   // entrywise, relative to the largest entry
  double closure = 1e-9;     // Frobenius residual of a span projection
  double rank = 1e-8;        // singular value threshold relative to sigma_max
  double fd_agreement = 1e-6;
  double fd_step = 1e-4;

  bool operator==(const Tolerances &) const = default;
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class InconsistentExtension : public Error {
public:
  using Error::Error;
};

class TypeMismatch : public Error {
public:
  using Error::Error;
};

class FrameMismatch : public Error {
public:
  using Error::Error;
};

class DifferentiationError : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class NotClosed : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace corep

#endif // COREP_TYPES_HPP
