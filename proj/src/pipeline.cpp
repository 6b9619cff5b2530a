#include "corep/cli/pipeline.hpp"
#include "corep/algebra.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

namespace corep::cli {

namespace {

MatrixData to_data(const ComplexMatrix &m)
{
  MatrixData out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out[static_cast<std::size_t>(r)].push_back(m(r, c));
  return out;
}

std::vector<double> to_data(const RVector<double> &v)
{
  return {v.data(), v.data() + v.size()};
}

ClosureData to_data(const ClosureReport<double> &c)
{
  ClosureData out;
  out.family = std::string(to_string(c.family));
  out.tolerance = c.tolerance;
  out.passed = c.passed;
  out.max_residual = c.max_residual();
  out.max_complex_residual = c.max_complex_residual();
  out.complex_passed = c.complex_passed();
  for (const auto &p : c.pairs)
    out.pairs.push_back({p.first, p.second, to_data(p.coeffs), p.residual, p.complex_residual});
  return out;
}

double max_generator_diff(const GeneratorBasis<double> &a, const GeneratorBasis<double> &b)
{
  double worst = 0;
  for (std::size_t k = 0; k < a.subgroup.size(); ++k)
    worst = std::max(worst, max_abs(ComplexMatrix(a.subgroup[k] - b.subgroup[k])));
  for (std::size_t k = 0; k < a.coset.size(); ++k)
    worst = std::max(worst, max_abs(ComplexMatrix(a.coset[k] - b.coset[k])));
  return worst;
}

struct CosetAnalysis {
  ClosureReport<double> coset_coset;
  ClosureReport<double> mixed;
};

CosetAnalysis analyze_coset(const GeneratorBasis<double> &basis, const TransportMap<double> &map, double tol)
{
  return {verify_coset_coset_closure(basis, map, tol), verify_mixed_closure(basis, map, tol)};
}

void fail(RunReport &r, std::string why, int code)
{
  r.failures.push_back(std::move(why));
  r.passed = false;
  // Differentiation problems outrank closure problems.
  r.exit_code = std::max(r.exit_code, code);
}

ComplexVector random_point(std::mt19937_64 &rng, Eigen::Index dim)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexVector x(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    x(k) = {re, im};
  }
  return x;
}

} // namespace

std::uint64_t seed_from_env(std::uint64_t fallback)
{
  const char *env = std::getenv("COREP_LIE_SEED");
  if (env == nullptr || *env == '\0')
    return fallback;
  char *end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw ConfigError(std::string("COREP_LIE_SEED: not an unsigned integer: '") + env + "'");
  return v;
}

RunReport run_pipeline(const GroupConfig &config, const PipelineOptions &opts)
{
  const auto &tol = config.tol;
  const LieGroupSpec<double> group = config.perturb != 0 ? perturbed(config.group, config.perturb) : config.group;

  RunReport r;
  r.group = config.source == "explicit" ? group.name() : config.source;
  r.n = group.n();
  r.d = group.d();
  r.extension_present = config.extension.has_value();
  r.tolerances = tol;
  r.perturb = config.perturb;
  r.seed = opts.seed;

  CoirrepType ctype = CoirrepType::a;
  if (config.extension) {
    const int sign = a0_square_sign(*config.extension, tol.equality);
    ctype = classify_coirrep(group, *config.extension, tol.equality);
    r.a0_square_sign = sign;
    r.ctype = std::string(to_string(ctype));
  }
  if (opts.stage == Stage::classify)
    return r;

  const auto exact = make_generator_basis(group, config.extension, ExtractionMode::exact, tol);
  const auto fd = make_generator_basis(group, config.extension, ExtractionMode::finite_difference, tol);
  const auto &basis = opts.mode == ExtractionMode::exact ? exact : fd;
  GeneratorData gens;
  gens.mode = std::string(to_string(opts.mode));
  for (const auto &x : basis.subgroup)
    gens.subgroup.push_back(to_data(x));
  for (const auto &x : basis.coset)
    gens.coset.push_back(to_data(x));
  gens.coset_present = basis.has_coset();
  gens.fd_exact_max_diff = max_generator_diff(exact, fd);
  r.generators = gens;
  if (!(gens.fd_exact_max_diff < tol.fd_agreement))
    fail(r, "finite-difference and exact generators disagree", exit_differentiation);
  if (opts.stage == Stage::generators)
    return r;

  const auto sc = compute_structure_constants(basis.subgroup, tol.closure);
  StructureData sd;
  sd.n = sc.n;
  sd.c = sc.values;
  sd.closed = sc.closed;
  for (int a = 0; a < sc.n; ++a)
    for (int b = 0; b < sc.n; ++b)
      sd.residuals.push_back(sc.residuals(a, b));
  r.structure_constants = sd;

  const auto sub = verify_subgroup_closure(basis, tol.closure);
  r.closure.push_back(to_data(sub));
  std::optional<TransportMap<double>> map;
  std::optional<CosetAnalysis> coset;
  if (config.extension) {
    map = transport_map(*config.extension, ctype, config.extension->delta_alpha0, tol.equality);
    coset = analyze_coset(basis, *map, tol.closure);
    r.closure.push_back(to_data(coset->coset_coset));
    r.closure.push_back(to_data(coset->mixed));
  }
  for (const auto &c : r.closure)
    if (!c.passed)
      fail(r, c.family + " brackets leave the real span (max residual " + std::to_string(c.max_residual) + ")",
           exit_closure);
  if (opts.stage == Stage::commutators)
    return r;

  std::mt19937_64 rng(opts.seed);

  // Every field in the x frame, subgroup first.
  std::vector<LinearVectorField<double>> fields;
  for (const auto &x : basis.subgroup)
    fields.push_back(make_operator(x, Frame::x));
  if (map) {
    const auto back = map->inverse();
    for (const auto &x : basis.coset)
      fields.push_back(transport(make_operator(x, Frame::x_prime), back));
  }
  r.checks.jacobi_residual = jacobi_check<double>(fields);
  if (!(*r.checks.jacobi_residual < tol.equality))
    fail(r, "Jacobi identity violated", exit_closure);

  double op_err = 0;
  const auto dim = fields.front().coeff.rows();
  for (int trial = 0; trial < 8; ++trial) {
    const ComplexVector x = random_point(rng, dim);
    for (std::size_t a = 0; a < fields.size(); ++a)
      for (std::size_t b = a + 1; b < fields.size(); ++b) {
        const ComplexVector lhs = coordinate_bracket_by_expansion(fields[a], fields[b], x);
        const ComplexVector rhs = apply_vf(vf_commutator(fields[a], fields[b]), x);
        op_err = std::max(op_err, max_abs(ComplexVector(lhs - rhs)));
      }
  }
  r.checks.operator_max_error = op_err;
  if (!(op_err < tol.equality))
    fail(r, "operator bracket disagrees with the matrix bracket", exit_closure);

  if (config.extension) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const double xi = angle(rng);
    const auto shifted = with_phases(*config.extension, xi, config.extension->delta_alpha0);
    const auto other = make_generator_basis(group, std::optional(shifted), opts.mode, tol);
    const auto other_map = transport_map(shifted, ctype, shifted.delta_alpha0, tol.equality);
    const auto again = analyze_coset(other, other_map, tol.closure);
    double change = 0;
    for (std::size_t k = 0; k < again.coset_coset.pairs.size(); ++k)
      change = std::max(change, std::abs(again.coset_coset.pairs[k].residual - coset->coset_coset.pairs[k].residual));
    for (std::size_t k = 0; k < again.mixed.pairs.size(); ++k)
      change = std::max(change, std::abs(again.mixed.pairs[k].residual - coset->mixed.pairs[k].residual));
    r.checks.random_xi = xi;
    r.checks.xi_residual_change = change;
    if (!(change < tol.closure))
      fail(r, "closure residuals depend on xi", exit_closure);

    const auto dimension = algebra_dimension(basis, *map, tol.rank);
    DimensionData dd;
    dd.computed = dimension.computed;
    dd.expected = dimension.expected;
    dd.classification = std::string(to_string(dimension.classification));
    dd.singular_values = to_data(dimension.rank.singular_values);
    dd.threshold = dimension.rank.threshold;
    if (std::isfinite(dimension.rank.margin))
      dd.margin = dimension.rank.margin;
    dd.dependency = to_data(dimension.rank.dependency);
    r.dimension = dd;
    if (ctype == CoirrepType::b && dimension.classification != DimensionClass::b_full)
      fail(r, "b-type algebra is not (2n+1)-dimensional", exit_closure);
  }
  return r;
}

} // namespace corep::cli
