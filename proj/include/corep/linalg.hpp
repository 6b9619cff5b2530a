#ifndef COREP_LINALG_HPP
#define COREP_LINALG_HPP

#include "corep/types.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace corep {

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived> &m)
{
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.size() == 0)
    return Real(0);
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived> &m)
{
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z)))
        return false;
    }
  return true;
}

/// Entrywise comparison with an absolute tolerance scaled by the largest
/// entry magnitude of either operand (floored at one).
template <typename DA, typename DB>
bool approx_equal(const Eigen::MatrixBase<DA> &a, const Eigen::MatrixBase<DB> &b, double tol)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return false;
  using Real = typename Eigen::NumTraits<typename DA::Scalar>::Real;
  const Real scale = std::max<Real>({Real(1), max_abs(a), max_abs(b)});
  return max_abs(a - b) <= Real(tol) * scale;
}

template <typename Real>
CMatrix<Real> identity(Eigen::Index d)
{
  return CMatrix<Real>::Identity(d, d);
}

template <typename Real>
CMatrix<Real> block_diag(const CMatrix<Real> &upper, const CMatrix<Real> &lower)
{
  CMatrix<Real> m = CMatrix<Real>::Zero(upper.rows() + lower.rows(), upper.cols() + lower.cols());
  m.topLeftCorner(upper.rows(), upper.cols()) = upper;
  m.bottomRightCorner(lower.rows(), lower.cols()) = lower;
  return m;
}

/// [[0, upper_right], [lower_left, 0]] for square blocks of equal size.
template <typename Real>
CMatrix<Real> block_antidiag(const CMatrix<Real> &upper_right, const CMatrix<Real> &lower_left)
{
  const auto d = upper_right.rows();
  CMatrix<Real> m = CMatrix<Real>::Zero(2 * d, 2 * d);
  m.topRightCorner(d, d) = upper_right;
  m.bottomLeftCorner(d, d) = lower_left;
  return m;
}

/// Norm of the two off-diagonal d x d blocks of a 2d x 2d matrix.
template <typename Real>
Real off_diagonal_block_norm(const CMatrix<Real> &m)
{
  const auto d = m.rows() / 2;
  return std::hypot(m.topRightCorner(d, d).norm(), m.bottomLeftCorner(d, d).norm());
}

template <typename Real>
bool is_square(const CMatrix<Real> &m)
{
  return m.rows() == m.cols() && m.rows() > 0;
}

template <typename Real>
Real smallest_singular_value(const CMatrix<Real> &m)
{
  Eigen::JacobiSVD<CMatrix<Real>> svd(m);
  const auto &s = svd.singularValues();
  return s.size() == 0 ? Real(0) : s(s.size() - 1);
}

/// Invertible when the smallest singular value exceeds `tol` times the largest.
template <typename Real>
bool is_invertible(const CMatrix<Real> &m, double tol)
{
  if (!is_square(m))
    return false;
  Eigen::JacobiSVD<CMatrix<Real>> svd(m);
  const auto &s = svd.singularValues();
  return s(0) > Real(0) && s(s.size() - 1) > Real(tol) * s(0);
}

template <typename Real>
CMatrix<Real> matrix_exp(const CMatrix<Real> &m)
{
  return m.exp();
}

/// Column-major vectorization with the real parts stacked above the
/// imaginary parts; spans of these vectors are spans over the reals.
template <typename Real>
RVector<Real> real_vectorize(const CMatrix<Real> &m)
{
  const auto n = m.size();
  RVector<Real> v(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = m.data()[k].real();
    v(n + k) = m.data()[k].imag();
  }
  return v;
}

template <typename Real>
CMatrix<Real> real_unvectorize(const RVector<Real> &v, Eigen::Index rows, Eigen::Index cols)
{
  const auto n = rows * cols;
  CMatrix<Real> m(rows, cols);
  for (Eigen::Index k = 0; k < n; ++k)
    m.data()[k] = Complex<Real>(v(k), v(n + k));
  return m;
}

/// Columns are the real vectorizations of the given matrices.
template <typename Real>
RMatrix<Real> stack_real(std::span<const CMatrix<Real>> mats)
{
  if (mats.empty())
    return {};
  const auto len = 2 * mats.front().size();
  RMatrix<Real> a(len, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != mats.front().rows() || mats[k].cols() != mats.front().cols())
      throw DimensionError("stack_real: matrices of unequal shape");
    a.col(static_cast<Eigen::Index>(k)) = real_vectorize(mats[k]);
  }
  return a;
}

template <typename Real>
struct RankInfo {
  int rank = 0;
  Real threshold = 0;
  RVector<Real> singular_values;
  /// Smallest ratio separating kept from dropped singular values and the
  /// threshold (infinite when nothing lies on the far side).
  Real margin = std::numeric_limits<Real>::infinity();
  /// Coefficients of the near-dependency realized by the smallest singular
  /// value; empty when the set is independent.
  RVector<Real> dependency;
};

/// Real-linear rank of a set of complex matrices via SVD of their real
/// vectorizations, thresholded at `rel_tol * sigma_max`.
template <typename Real>
RankInfo<Real> real_rank(std::span<const CMatrix<Real>> mats, double rel_tol)
{
  RankInfo<Real> info;
  if (mats.empty())
    return info;
  const RMatrix<Real> a = stack_real(mats);
  Eigen::JacobiSVD<RMatrix<Real>> svd(a, Eigen::ComputeFullV);
  info.singular_values = svd.singularValues();
  const auto &s = info.singular_values;
  if (s.size() == 0 || s(0) == Real(0))
    return info;
  info.threshold = Real(rel_tol) * s(0);
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) > info.threshold)
      ++info.rank;
  if (info.rank > 0)
    info.margin = s(info.rank - 1) / info.threshold;
  if (info.rank < static_cast<int>(mats.size())) {
    // JacobiSVD returns min(rows, cols) values; a missing value is an exact zero.
    const Real next = info.rank < s.size() ? s(info.rank) : Real(0);
    if (next > Real(0))
      info.margin = std::min(info.margin, info.threshold / next);
    info.dependency = svd.matrixV().col(svd.matrixV().cols() - 1);
  }
  return info;
}

} // namespace corep

#endif // COREP_LINALG_HPP
