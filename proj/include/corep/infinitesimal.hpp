#ifndef COREP_INFINITESIMAL_HPP
#define COREP_INFINITESIMAL_HPP

#include "corep/group_core.hpp"
#include "corep/numdiff.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace corep {

enum class ExtractionMode { exact, finite_difference };

inline std::string_view to_string(ExtractionMode m)
{
  return m == ExtractionMode::exact ? "exact" : "fd";
}

/// The first-order operator J = A_ij x_j d/dx_i, with its coefficients
/// expressed at the base point named by `frame`.
template <typename Real>
struct LinearVectorField {
  CMatrix<Real> coeff;
  Frame frame = Frame::x;
};

template <typename Real>
struct GeneratorBasis {
  /// X_sigma (a-type) or blockdiag(Xbar_sigma, Xbar_sigma) (b-type).
  std::vector<CMatrix<Real>> subgroup;
  /// X'_0..X'_n (a-type) or blockdiag(Xbar'_mu, -Xbar'_mu) (b-type); empty
  /// when no antilinear extension is present.
  std::vector<CMatrix<Real>> coset;
  CoirrepType ctype = CoirrepType::a;

  int n() const { return static_cast<int>(subgroup.size()); }
  bool has_coset() const { return !coset.empty(); }
};

/// Invertible change of base point; coefficients transform by conjugation.
template <typename Real>
struct TransportMap {
  CMatrix<Real> matrix;
  CMatrix<Real> inverse_matrix;
  Frame from = Frame::x;
  Frame to = Frame::x_prime;

  TransportMap inverse() const { return {inverse_matrix, matrix, to, from}; }
};

/// Coset block e^{i dalpha0} e^{i xi} Delta(g(dalpha)) N.
template <typename Real>
CMatrix<Real> coset_block(const LieGroupSpec<Real> &spec, const AntilinearExtension<Real> &ext, Real delta_alpha0,
                          const RVector<Real> &delta_alpha)
{
  return std::polar(Real(1), delta_alpha0 + ext.xi) * (exp_curve(spec, delta_alpha).matrix() * ext.N);
}

namespace detail {

template <typename Real>
RVector<Real> unit_direction(int n, int sigma, Real t)
{
  RVector<Real> v = RVector<Real>::Zero(n);
  v(sigma) = t;
  return v;
}

template <typename Real>
std::vector<CMatrix<Real>> double_blocks(const std::vector<CMatrix<Real>> &upper, int lower_sign)
{
  std::vector<CMatrix<Real>> out;
  out.reserve(upper.size());
  for (const auto &u : upper)
    out.push_back(block_diag<Real>(u, CMatrix<Real>(Complex<Real>(lower_sign) * u)));
  return out;
}

} // namespace detail

/// Derivatives of Delta(g(dalpha)) at dalpha = 0, one per parameter.
template <typename Real>
std::vector<CMatrix<Real>> extract_subgroup_generators(const LieGroupSpec<Real> &spec, CoirrepType ctype,
                                                       ExtractionMode mode, const Tolerances &tol = {})
{
  std::vector<CMatrix<Real>> blocks;
  blocks.reserve(static_cast<std::size_t>(spec.n()));
  for (int sigma = 0; sigma < spec.n(); ++sigma) {
    if (mode == ExtractionMode::exact) {
      blocks.push_back(spec.generator(sigma));
      continue;
    }
    auto curve = [&](Real t) { return exp_curve(spec, detail::unit_direction<Real>(spec.n(), sigma, t)).matrix(); };
    blocks.push_back(richardson_derivative<Real>(curve, Real(tol.fd_step), tol.fd_agreement));
  }
  return ctype == CoirrepType::a ? blocks : detail::double_blocks(blocks, +1);
}

/// Derivatives of the coset block with respect to (alpha0, alpha_1..alpha_n)
/// at the identity: X'_0 = iN, X'_sigma = X_sigma N. The phase e^{i xi} is
/// absorbed into the alpha0 base point. b-type generators are assembled as
/// blockdiag(Xbar', -Xbar') from the upper blocks.
template <typename Real>
std::vector<CMatrix<Real>> extract_coset_generators(const LieGroupSpec<Real> &spec,
                                                    const AntilinearExtension<Real> &ext, CoirrepType ctype,
                                                    ExtractionMode mode, const Tolerances &tol = {})
{
  const auto actual = classify_coirrep(spec, ext, tol.equality);
  if (actual != ctype)
    throw TypeMismatch("extract_coset_generators: extension is " + std::string(to_string(actual)) +
                       "-type, requested " + std::string(to_string(ctype)) + "-type");
  const int n = spec.n();
  std::vector<CMatrix<Real>> upper;
  upper.reserve(static_cast<std::size_t>(n + 1));
  if (mode == ExtractionMode::exact) {
    upper.push_back(Complex<Real>(0, 1) * ext.N);
    for (int sigma = 0; sigma < n; ++sigma)
      upper.push_back(spec.generator(sigma) * ext.N);
  } else {
    const Real base = -ext.xi;
    const RVector<Real> origin = RVector<Real>::Zero(n);
    auto phase_curve = [&](Real t) { return coset_block(spec, ext, base + t, origin); };
    upper.push_back(richardson_derivative<Real>(phase_curve, Real(tol.fd_step), tol.fd_agreement));
    for (int sigma = 0; sigma < n; ++sigma) {
      auto curve = [&](Real t) { return coset_block(spec, ext, base, detail::unit_direction<Real>(n, sigma, t)); };
      upper.push_back(richardson_derivative<Real>(curve, Real(tol.fd_step), tol.fd_agreement));
    }
  }
  return ctype == CoirrepType::a ? upper : detail::double_blocks(upper, -1);
}

/// Full generator set; the coset list is left empty without an extension.
template <typename Real>
GeneratorBasis<Real> make_generator_basis(const LieGroupSpec<Real> &spec,
                                          const std::optional<AntilinearExtension<Real>> &ext, ExtractionMode mode,
                                          const Tolerances &tol = {})
{
  GeneratorBasis<Real> basis;
  basis.ctype = ext ? classify_coirrep(spec, *ext, tol.equality) : CoirrepType::a;
  basis.subgroup = extract_subgroup_generators(spec, basis.ctype, mode, tol);
  if (ext)
    basis.coset = extract_coset_generators(spec, *ext, basis.ctype, mode, tol);
  return basis;
}

template <typename Real>
LinearVectorField<Real> make_operator(const CMatrix<Real> &x, Frame frame)
{
  if (!is_square(x))
    throw DimensionError("make_operator: coefficient matrix must be square");
  return {x, frame};
}

/// Coefficient vector u_i(x) = A_ij x_j of the operator at `point`.
template <typename Real>
CVector<Real> apply_vf(const LinearVectorField<Real> &vf, const CVector<Real> &point)
{
  if (vf.coeff.cols() != point.size())
    throw DimensionError("apply_vf: field of dimension " + std::to_string(vf.coeff.cols()) +
                         " applied to a point of length " + std::to_string(point.size()));
  return vf.coeff * point;
}

/// [J_A, J_B] = J_{BA - AB}. Note the sign: the bracket of the linear
/// fields is the negative of the matrix commutator [A, B].
template <typename Real>
LinearVectorField<Real> vf_commutator(const LinearVectorField<Real> &u, const LinearVectorField<Real> &v)
{
  if (u.frame != v.frame)
    throw FrameMismatch("vf_commutator: operators referred to different points (" + std::string(to_string(u.frame)) +
                        " vs " + std::string(to_string(v.frame)) + ")");
  if (u.coeff.rows() != v.coeff.rows())
    throw DimensionError("vf_commutator: dimension mismatch");
  return {CMatrix<Real>(v.coeff * u.coeff - u.coeff * v.coeff), u.frame};
}

/// [J_u, J_v] applied to each coordinate function f_m(x) = x_m at `point`,
/// evaluated by expanding both operator compositions index by index:
///   sum_{ijkl} A_ik B_jl (x_k d_i (x_l d_j f) - x_l d_j (x_k d_i f)).
/// The second-derivative terms vanish for coordinate functions. This path
/// does not use the matrix form of the bracket and serves as a cross-check.
template <typename Real>
CVector<Real> coordinate_bracket_by_expansion(const LinearVectorField<Real> &u, const LinearVectorField<Real> &v,
                                              const CVector<Real> &point)
{
  if (u.frame != v.frame)
    throw FrameMismatch("coordinate_bracket_by_expansion: operators referred to different points");
  const auto dim = point.size();
  if (u.coeff.rows() != dim || v.coeff.rows() != dim)
    throw DimensionError("coordinate_bracket_by_expansion: dimension mismatch");
  const auto &a = u.coeff;
  const auto &b = v.coeff;
  CVector<Real> out = CVector<Real>::Zero(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    Complex<Real> acc(0);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index k = 0; k < dim; ++k)
          for (Eigen::Index l = 0; l < dim; ++l) {
            // d_j x_m = delta_jm; d_i x_l = delta_il.
            const Complex<Real> first = (i == l && j == m) ? point(k) : Complex<Real>(0);
            const Complex<Real> second = (j == k && i == m) ? point(l) : Complex<Real>(0);
            acc += a(i, k) * b(j, l) * (first - second);
          }
    out(m) = acc;
  }
  return out;
}

/// Map x -> x' at the identity: e^{-i dalpha0} N^{-1} (a-type) or
/// e^{-i dalpha0} blockdiag(N^{-1}, -N^{-1}) (b-type).
template <typename Real>
TransportMap<Real> transport_map(const AntilinearExtension<Real> &ext, CoirrepType ctype, Real delta_alpha0 = 0,
                                 double rank_tol = 1e-10)
{
  if (!is_invertible(ext.N, rank_tol))
    throw SingularMatrix("transport_map: N is singular");
  const CMatrix<Real> n_inv = ext.N.inverse();
  const Complex<Real> phase = std::polar(Real(1), -delta_alpha0);
  TransportMap<Real> map;
  if (ctype == CoirrepType::a) {
    map.matrix = phase * n_inv;
    map.inverse_matrix = ext.N / phase;
  } else {
    map.matrix = phase * block_diag<Real>(n_inv, CMatrix<Real>(-n_inv));
    map.inverse_matrix = block_diag<Real>(ext.N, CMatrix<Real>(-ext.N)) / phase;
  }
  return map;
}

template <typename Real>
LinearVectorField<Real> transport(const LinearVectorField<Real> &vf, const TransportMap<Real> &map)
{
  if (vf.frame != map.from)
    throw FrameMismatch("transport: field lives in frame " + std::string(to_string(vf.frame)) + ", map starts at " +
                        std::string(to_string(map.from)));
  if (vf.coeff.rows() != map.matrix.rows())
    throw DimensionError("transport: dimension mismatch");
  return {CMatrix<Real>(map.matrix * vf.coeff * map.inverse_matrix), map.to};
}

} // namespace corep

#endif // COREP_INFINITESIMAL_HPP
