#ifndef COREP_ALGEBRA_HPP
#define COREP_ALGEBRA_HPP

#include "corep/infinitesimal.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace corep {

template <typename Real>
struct SpanProjection {
  RVector<Real> coeffs;
  Real residual = 0;
};

/// Least-squares expansion C ~ sum_k c_k B_k with REAL coefficients, by
/// stacking the real and imaginary parts of the vectorized matrices.
template <typename Real>
SpanProjection<Real> project_onto_span(const CMatrix<Real> &c, std::span<const CMatrix<Real>> basis)
{
  if (basis.empty())
    throw InvalidArgument("project_onto_span: empty basis");
  for (const auto &b : basis)
    if (b.rows() != c.rows() || b.cols() != c.cols())
      throw DimensionError("project_onto_span: basis matrix shape differs from target");
  const RMatrix<Real> a = stack_real(basis);
  const RVector<Real> target = real_vectorize(c);
  Eigen::CompleteOrthogonalDecomposition<RMatrix<Real>> cod(a);
  SpanProjection<Real> out;
  out.coeffs = cod.solve(target);
  out.residual = (a * out.coeffs - target).norm();
  return out;
}

/// Residual of the same expansion over the complex field. Reported next to
/// the real result, never substituted for it.
template <typename Real>
Real complex_span_residual(const CMatrix<Real> &c, std::span<const CMatrix<Real>> basis)
{
  if (basis.empty())
    throw InvalidArgument("complex_span_residual: empty basis");
  CMatrix<Real> a(c.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    a.col(static_cast<Eigen::Index>(k)) = basis[k].reshaped();
  const CVector<Real> target = c.reshaped();
  Eigen::CompleteOrthogonalDecomposition<CMatrix<Real>> cod(a);
  const CVector<Real> coeffs = cod.solve(target);
  return (a * coeffs - target).norm();
}

/// c^tau_{sigma rho} with [J_sigma, J_rho] = c^tau_{sigma rho} J_tau.
template <typename Real>
struct StructureConstants {
  int n = 0;
  std::vector<Real> values;  // index (tau * n + sigma) * n + rho
  RMatrix<Real> residuals;   // per pair (sigma, rho)
  bool closed = true;

  StructureConstants() = default;
  explicit StructureConstants(int dim)
      : n(dim), values(static_cast<std::size_t>(dim * dim * dim), Real(0)), residuals(RMatrix<Real>::Zero(dim, dim))
  {
  }

  Real &operator()(int tau, int sigma, int rho) { return values[static_cast<std::size_t>((tau * n + sigma) * n + rho)]; }
  Real operator()(int tau, int sigma, int rho) const
  {
    return values[static_cast<std::size_t>((tau * n + sigma) * n + rho)];
  }
  Real max_residual() const { return residuals.size() == 0 ? Real(0) : residuals.maxCoeff(); }
};

/// Fills one triangle and mirrors it, so antisymmetry holds exactly.
template <typename Real>
StructureConstants<Real> compute_structure_constants(const std::vector<CMatrix<Real>> &gens, double closure_tol)
{
  const int n = static_cast<int>(gens.size());
  StructureConstants<Real> sc(n);
  for (int sigma = 0; sigma < n; ++sigma)
    for (int rho = sigma + 1; rho < n; ++rho) {
      const auto bracket = vf_commutator(make_operator(gens[sigma], Frame::x), make_operator(gens[rho], Frame::x));
      const auto proj = project_onto_span<Real>(bracket.coeff, gens);
      for (int tau = 0; tau < n; ++tau) {
        sc(tau, sigma, rho) = proj.coeffs(tau);
        sc(tau, rho, sigma) = -proj.coeffs(tau);
      }
      sc.residuals(sigma, rho) = sc.residuals(rho, sigma) = proj.residual;
      if (!(proj.residual < Real(closure_tol)))
        sc.closed = false;
    }
  return sc;
}

template <typename Real>
StructureConstants<Real> structure_constants_subgroup(const std::vector<CMatrix<Real>> &gens,
                                                      double closure_tol = 1e-9)
{
  auto sc = compute_structure_constants(gens, closure_tol);
  if (!sc.closed)
    throw NotClosed("subgroup not closed: max bracket residual " + std::to_string(double(sc.max_residual())));
  return sc;
}

enum class ClosureFamily { sub_sub, coset_coset, sub_coset };

inline std::string_view to_string(ClosureFamily f)
{
  switch (f) {
  case ClosureFamily::sub_sub: return "sub-sub";
  case ClosureFamily::coset_coset: return "coset-coset";
  case ClosureFamily::sub_coset: return "sub-coset";
  }
  return "?";
}

template <typename Real>
struct PairResult {
  /// Zero-based indices into the subgroup list (sigma) or coset list (mu,
  /// where 0 is the alpha0 direction).
  int first = 0;
  int second = 0;
  RVector<Real> coeffs;
  Real residual = 0;
  Real complex_residual = 0;
};

template <typename Real>
struct ClosureReport {
  ClosureFamily family = ClosureFamily::sub_sub;
  std::vector<PairResult<Real>> pairs;
  Real tolerance = 0;
  bool passed = true;

  Real max_residual() const
  {
    Real m = 0;
    for (const auto &p : pairs)
      m = std::max(m, p.residual);
    return m;
  }
  Real max_complex_residual() const
  {
    Real m = 0;
    for (const auto &p : pairs)
      m = std::max(m, p.complex_residual);
    return m;
  }
  bool complex_passed() const { return max_complex_residual() < tolerance; }
};

namespace detail {

template <typename Real>
PairResult<Real> expand(int first, int second, const CMatrix<Real> &bracket, std::span<const CMatrix<Real>> span)
{
  const auto proj = project_onto_span<Real>(bracket, span);
  return {first, second, proj.coeffs, proj.residual, complex_span_residual<Real>(bracket, span)};
}

template <typename Real>
ClosureReport<Real> finish(ClosureReport<Real> report)
{
  report.passed = std::all_of(report.pairs.begin(), report.pairs.end(),
                              [&](const PairResult<Real> &p) { return p.residual < report.tolerance; });
  return report;
}

/// Normalizes either direction of a map to the x -> x' map.
template <typename Real>
TransportMap<Real> forward_map(const TransportMap<Real> &map)
{
  if (map.from == Frame::x && map.to == Frame::x_prime)
    return map;
  if (map.from == Frame::x_prime && map.to == Frame::x)
    return map.inverse();
  throw FrameMismatch("transport map must connect the x and x' frames");
}

template <typename Real>
void require_coset(const GeneratorBasis<Real> &basis, const char *what)
{
  if (!basis.has_coset())
    throw InvalidArgument(std::string(what) + ": generator basis has no coset operators");
}

} // namespace detail

/// [J_sigma, J_rho], sigma < rho, expanded over the subgroup operators.
template <typename Real>
ClosureReport<Real> verify_subgroup_closure(const GeneratorBasis<Real> &basis, double closure_tol = 1e-9)
{
  ClosureReport<Real> report;
  report.family = ClosureFamily::sub_sub;
  report.tolerance = Real(closure_tol);
  const std::span<const CMatrix<Real>> span(basis.subgroup);
  for (int s = 0; s < basis.n(); ++s)
    for (int r = s + 1; r < basis.n(); ++r) {
      const auto b = vf_commutator(make_operator(basis.subgroup[s], Frame::x), make_operator(basis.subgroup[r], Frame::x));
      report.pairs.push_back(detail::expand<Real>(s, r, b.coeff, span));
    }
  return detail::finish(std::move(report));
}

/// [J'_mu, J'_nu], mu < nu, brought to the x frame and expanded over the
/// subgroup operators.
template <typename Real>
ClosureReport<Real> verify_coset_coset_closure(const GeneratorBasis<Real> &basis, const TransportMap<Real> &map,
                                               double closure_tol = 1e-9)
{
  detail::require_coset(basis, "verify_coset_coset_closure");
  const auto back = detail::forward_map(map).inverse();
  ClosureReport<Real> report;
  report.family = ClosureFamily::coset_coset;
  report.tolerance = Real(closure_tol);
  const std::span<const CMatrix<Real>> span(basis.subgroup);
  const int m = static_cast<int>(basis.coset.size());
  for (int mu = 0; mu < m; ++mu)
    for (int nu = mu + 1; nu < m; ++nu) {
      const auto b = vf_commutator(make_operator(basis.coset[mu], Frame::x_prime),
                                   make_operator(basis.coset[nu], Frame::x_prime));
      report.pairs.push_back(detail::expand<Real>(mu, nu, transport(b, back).coeff, span));
    }
  return detail::finish(std::move(report));
}

/// [J_sigma, J'_mu] with J_sigma brought to the x' frame, expanded over the
/// coset operators.
template <typename Real>
ClosureReport<Real> verify_mixed_closure(const GeneratorBasis<Real> &basis, const TransportMap<Real> &map,
                                         double closure_tol = 1e-9)
{
  detail::require_coset(basis, "verify_mixed_closure");
  const auto fwd = detail::forward_map(map);
  ClosureReport<Real> report;
  report.family = ClosureFamily::sub_coset;
  report.tolerance = Real(closure_tol);
  const std::span<const CMatrix<Real>> span(basis.coset);
  for (int s = 0; s < basis.n(); ++s) {
    const auto moved = transport(make_operator(basis.subgroup[s], Frame::x), fwd);
    for (int mu = 0; mu < static_cast<int>(basis.coset.size()); ++mu) {
      const auto b = vf_commutator(moved, make_operator(basis.coset[mu], Frame::x_prime));
      report.pairs.push_back(detail::expand<Real>(s, mu, b.coeff, span));
    }
  }
  return detail::finish(std::move(report));
}

/// Largest Frobenius norm of [[u,v],w] + [[v,w],u] + [[w,u],v] over all
/// triples of the given fields.
template <typename Real>
Real jacobi_check(std::span<const LinearVectorField<Real>> fields)
{
  if (fields.empty())
    return 0;
  for (const auto &f : fields)
    if (f.frame != fields.front().frame)
      throw FrameMismatch("jacobi_check: fields referred to different points");
  Real worst = 0;
  const auto k = fields.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c) {
        const auto &u = fields[a];
        const auto &v = fields[b];
        const auto &w = fields[c];
        const CMatrix<Real> sum = vf_commutator(vf_commutator(u, v), w).coeff +
                                  vf_commutator(vf_commutator(v, w), u).coeff +
                                  vf_commutator(vf_commutator(w, u), v).coeff;
        worst = std::max(worst, sum.norm());
      }
  return worst;
}

enum class DimensionClass { a_degenerate, b_full, other };

inline std::string_view to_string(DimensionClass c)
{
  switch (c) {
  case DimensionClass::a_degenerate: return "a-degenerate";
  case DimensionClass::b_full: return "b-full";
  case DimensionClass::other: return "other";
  }
  return "?";
}

template <typename Real>
struct AlgebraDimension {
  int computed = 0;
  int expected = 0;
  DimensionClass classification = DimensionClass::other;
  RankInfo<Real> rank;
};

/// Real dimension of span{J_sigma} + span{J'_mu}, all taken in the x frame.
template <typename Real>
AlgebraDimension<Real> algebra_dimension(const GeneratorBasis<Real> &basis, const TransportMap<Real> &map,
                                         double rank_tol = 1e-8)
{
  std::vector<CMatrix<Real>> all = basis.subgroup;
  if (basis.has_coset()) {
    const auto back = detail::forward_map(map).inverse();
    for (const auto &x : basis.coset)
      all.push_back(transport(make_operator(x, Frame::x_prime), back).coeff);
  }
  AlgebraDimension<Real> out;
  out.rank = real_rank<Real>(all, rank_tol);
  out.computed = out.rank.rank;
  const int n = basis.n();
  out.expected = basis.ctype == CoirrepType::a ? n + 1 : 2 * n + 1;
  if (!basis.has_coset())
    out.classification = DimensionClass::other;
  else if (out.computed == n + 1)
    out.classification = DimensionClass::a_degenerate;
  else if (out.computed == 2 * n + 1)
    out.classification = DimensionClass::b_full;
  else
    out.classification = DimensionClass::other;
  return out;
}

} // namespace corep

#endif // COREP_ALGEBRA_HPP
