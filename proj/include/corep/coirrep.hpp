#ifndef COREP_COIRREP_HPP
#define COREP_COIRREP_HPP

#include "corep/group_core.hpp"

#include <cmath>
#include <utility>

namespace corep {

/// A point of the representation space. The half-angle factor
/// e^{i alpha0/2} picked up by the coordinates is kept in `phase` instead of
/// being multiplied into `entries`; `materialize` applies it.
template <typename Real>
struct CoordinateVector {
  Frame frame = Frame::x;
  CVector<Real> entries;
  Real phase = 0;
  bool has_phase = false;
  /// Coset images of b-type points carry the d-block labelled x'_d on top.
  bool blocks_swapped = false;

  CoordinateVector() = default;
  CoordinateVector(Frame f, CVector<Real> v) : frame(f), entries(std::move(v))
  {
    if (frame == Frame::y_original && entries.size() % 2 != 0)
      throw DimensionError("y-original coordinates must have even length 2d");
  }

  Eigen::Index size() const { return entries.size(); }

  CVector<Real> materialize() const
  {
    if (!has_phase)
      return entries;
    return std::polar(Real(1), phase / Real(2)) * entries;
  }
};

enum class CosetVariant { ga0, a0g };

enum class MatrixSide { subgroup, coset_ga0, coset_a0g };

/// A b-type coirrep matrix after the block transformations.
template <typename Real>
struct CoirrepMatrix {
  CMatrix<Real> matrix;
  MatrixSide side = MatrixSide::subgroup;
  CoirrepType ctype = CoirrepType::b;

  bool is_coset() const { return side != MatrixSide::subgroup; }
  GroupElement<Real> as_element() const
  {
    return GroupElement<Real>(matrix, is_coset() ? Linearity::antilinear : Linearity::linear, 0.0);
  }
};

namespace detail {

template <typename Real>
void require_length(const CVector<Real> &v, Eigen::Index expected, const char *what)
{
  if (v.size() != expected)
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) + ", got " +
                         std::to_string(v.size()));
}

template <typename Real>
void require_type(const AntilinearExtension<Real> &ext, CoirrepType wanted, const char *what)
{
  if (classify_coirrep(ext) != wanted)
    throw TypeMismatch(std::string(what) + ": type mismatch, requires a " + std::string(to_string(wanted)) +
                       "-type extension");
}

template <typename Real>
void require_linear(const GroupElement<Real> &g, Eigen::Index d, const char *what)
{
  if (g.is_antilinear())
    throw TypeMismatch(std::string(what) + ": expected a subgroup (linear) element");
  if (g.dim() != d)
    throw DimensionError(std::string(what) + ": element dimension " + std::to_string(g.dim()) +
                         " does not match " + std::to_string(d));
}

template <typename Real>
CoordinateVector<Real> carry_phase(CoordinateVector<Real> out, const CoordinateVector<Real> &in, Real alpha0)
{
  // The e^{i alpha0/2} factor is acquired once; repeated actions keep it.
  out.has_phase = true;
  out.phase = in.has_phase ? in.phase : alpha0;
  return out;
}

} // namespace detail

/// Coordinates of the two d-dimensional a-type blocks:
///   x1_i = (y_i + e^{i xi} (N y_d)_i) / sqrt 2
///   x2_i = i (-y_i + e^{i xi} (N y_d)_i) / sqrt 2
template <typename Real>
std::pair<CVector<Real>, CVector<Real>> transform_coords_a(const CVector<Real> &y,
                                                           const AntilinearExtension<Real> &ext)
{
  const auto d = ext.d();
  detail::require_length(y, 2 * d, "transform_coords_a");
  const Complex<Real> i(0, 1);
  const CVector<Real> upper = y.head(d);
  const CVector<Real> twisted = std::polar(Real(1), ext.xi) * (ext.N * y.tail(d));
  const Real r = Real(1) / std::sqrt(Real(2));
  return {r * (upper + twisted), (i * r) * (twisted - upper)};
}

/// b-type coordinates: x_i = -i y_i, x_{d+i} = -i (N y_d)_i.
template <typename Real>
CVector<Real> transform_coords_b(const CVector<Real> &y, const AntilinearExtension<Real> &ext)
{
  const auto d = ext.d();
  detail::require_length(y, 2 * d, "transform_coords_b");
  const Complex<Real> mi(0, -1);
  CVector<Real> x(2 * d);
  x.head(d) = mi * y.head(d);
  x.tail(d) = mi * (ext.N * y.tail(d));
  return x;
}

/// x = Delta(g) e^{i alpha0/2} x0.
template <typename Real>
CoordinateVector<Real> act_subgroup_a(const GroupElement<Real> &g, const CoordinateVector<Real> &x0, Real alpha0)
{
  if (x0.frame != Frame::x)
    throw FrameMismatch("act_subgroup_a: point must be in the x frame");
  detail::require_linear(g, x0.size(), "act_subgroup_a");
  return detail::carry_phase(CoordinateVector<Real>(Frame::x, g.matrix() * x0.entries), x0, alpha0);
}

/// One block of the coset action:
///   ga0: e^{i alpha0} e^{i xi} Delta(g) N e^{i alpha0/2} x0
///   a0g: e^{i alpha0} e^{i xi} N conj(Delta(g)) e^{i alpha0/2} x0
template <typename Real>
CoordinateVector<Real> act_coset_a(const GroupElement<Real> &g, const AntilinearExtension<Real> &ext,
                                   const CoordinateVector<Real> &x0, Real alpha0, CosetVariant variant)
{
  if (x0.frame != Frame::x)
    throw FrameMismatch("act_coset_a: point must be in the x frame");
  detail::require_linear(g, ext.d(), "act_coset_a");
  detail::require_length(x0.entries, ext.d(), "act_coset_a");
  detail::require_type(ext, CoirrepType::a, "act_coset_a");
  const CMatrix<Real> block = variant == CosetVariant::ga0 ? CMatrix<Real>(g.matrix() * ext.N)
                                                           : CMatrix<Real>(ext.N * g.matrix().conjugate());
  const Complex<Real> factor = std::polar(Real(1), alpha0 + ext.xi);
  return detail::carry_phase(CoordinateVector<Real>(Frame::x_prime, factor * (block * x0.entries)), x0, alpha0);
}

/// b-type coirrep matrices:
///   subgroup   blockdiag(Delta, Delta)
///   coset-ga0  [[0, Delta N], [-Delta N, 0]]
///   coset-a0g  [[0, N conj(Delta)], [-N conj(Delta), 0]]
template <typename Real>
CoirrepMatrix<Real> build_b_matrix(const GroupElement<Real> &g, const AntilinearExtension<Real> &ext,
                                   MatrixSide side)
{
  detail::require_linear(g, ext.d(), "build_b_matrix");
  detail::require_type(ext, CoirrepType::b, "build_b_matrix");
  CoirrepMatrix<Real> out;
  out.side = side;
  switch (side) {
  case MatrixSide::subgroup:
    out.matrix = block_diag<Real>(g.matrix(), g.matrix());
    break;
  case MatrixSide::coset_ga0: {
    const CMatrix<Real> b = g.matrix() * ext.N;
    out.matrix = block_antidiag<Real>(b, -b);
    break;
  }
  case MatrixSide::coset_a0g: {
    const CMatrix<Real> b = ext.N * g.matrix().conjugate();
    out.matrix = block_antidiag<Real>(b, -b);
    break;
  }
  }
  return out;
}

/// Applies a b-type matrix to a stacked point (x0 | x0_d). Coset sides carry
/// the extra e^{i alpha0} prefactor and return the point labelled (x'_d | x').
template <typename Real>
CoordinateVector<Real> act_b(const CoirrepMatrix<Real> &m, const CoordinateVector<Real> &point, Real alpha0)
{
  if (point.frame != Frame::x)
    throw FrameMismatch("act_b: point must be in the x frame");
  if (m.matrix.cols() != point.size() || point.size() % 2 != 0)
    throw DimensionError("act_b: matrix is " + std::to_string(m.matrix.rows()) + "x" +
                         std::to_string(m.matrix.cols()) + ", point has length " + std::to_string(point.size()));
  if (!m.is_coset())
    return detail::carry_phase(CoordinateVector<Real>(Frame::x, m.matrix * point.entries), point, alpha0);
  CoordinateVector<Real> out(Frame::x_prime, std::polar(Real(1), alpha0) * (m.matrix * point.entries));
  out.blocks_swapped = true;
  return detail::carry_phase(std::move(out), point, alpha0);
}

} // namespace corep

#endif // COREP_COIRREP_HPP
