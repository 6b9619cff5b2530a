#include "corep/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace corep::cli {

using nlohmann::json;

namespace {

json matrix_json(const MatrixData &m)
{
  json rows = json::array();
  for (const auto &row : m) {
    json r = json::array();
    for (const auto &z : row)
      r.push_back(json::array({z.real(), z.imag()}));
    rows.push_back(std::move(r));
  }
  return rows;
}

MatrixData matrix_from(const json &j)
{
  MatrixData m;
  for (const auto &row : j) {
    std::vector<std::complex<double>> r;
    for (const auto &z : row)
      r.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<double> doubles(const json &j)
{
  std::vector<double> v;
  for (const auto &x : j)
    v.push_back(x.get<double>());
  return v;
}

template <typename T>
json optional_json(const std::optional<T> &v)
{
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json &j, const char *key)
{
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

std::string format_real(double v, int digits)
{
  if (!std::isfinite(v))
    return "null";
  if (v == 0)
    v = 0;  // drop the sign of negative zero so emission is a fixed point
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void dump(const json &j, std::ostringstream &out, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
  case json::value_t::object: {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto &[key, value] : j.items()) {
      out << (first ? "" : ",\n") << inner << json(key).dump() << ": ";
      dump(value, out, indent + 2);
      first = false;
    }
    out << "\n" << pad << "}";
    return;
  }
  case json::value_t::array: {
    if (j.empty()) {
      out << "[]";
      return;
    }
    // Arrays of scalars stay on one line.
    const bool flat = std::none_of(j.begin(), j.end(), [](const json &e) { return e.is_structured(); });
    if (flat) {
      out << "[";
      for (std::size_t k = 0; k < j.size(); ++k) {
        out << (k ? ", " : "");
        dump(j[k], out, indent);
      }
      out << "]";
      return;
    }
    out << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << (k ? ",\n" : "") << inner;
      dump(j[k], out, indent + 2);
    }
    out << "\n" << pad << "]";
    return;
  }
  case json::value_t::number_float:
    out << format_real(j.get<double>(), 17);
    return;
  default:
    out << j.dump();
    return;
  }
}

} // namespace

json to_json(const RunReport &r)
{
  json j;
  j["schema"] = r.schema;
  j["command"] = r.command;
  j["group"] = r.group;
  j["n"] = r.n;
  j["d"] = r.d;
  j["extension_present"] = r.extension_present;
  j["ctype"] = optional_json(r.ctype);
  j["a0_square_sign"] = optional_json(r.a0_square_sign);
  if (r.generators) {
    const auto &g = *r.generators;
    json gj;
    gj["mode"] = g.mode;
    gj["subgroup"] = json::array();
    for (const auto &m : g.subgroup)
      gj["subgroup"].push_back(matrix_json(m));
    gj["coset"] = json::array();
    for (const auto &m : g.coset)
      gj["coset"].push_back(matrix_json(m));
    gj["coset_present"] = g.coset_present;
    gj["fd_exact_max_diff"] = g.fd_exact_max_diff;
    j["generators"] = std::move(gj);
  } else {
    j["generators"] = nullptr;
  }
  if (r.structure_constants) {
    const auto &s = *r.structure_constants;
    j["structure_constants"] = {{"n", s.n}, {"c", s.c}, {"residuals", s.residuals}, {"closed", s.closed}};
  } else {
    j["structure_constants"] = nullptr;
  }
  j["closure"] = json::array();
  for (const auto &c : r.closure) {
    json cj;
    cj["family"] = c.family;
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    cj["max_residual"] = c.max_residual;
    cj["max_complex_residual"] = c.max_complex_residual;
    cj["complex_passed"] = c.complex_passed;
    cj["pairs"] = json::array();
    for (const auto &p : c.pairs)
      cj["pairs"].push_back({{"first", p.first},
                             {"second", p.second},
                             {"coeffs", p.coeffs},
                             {"residual", p.residual},
                             {"complex_residual", p.complex_residual}});
    j["closure"].push_back(std::move(cj));
  }
  if (r.dimension) {
    const auto &d = *r.dimension;
    j["dimension"] = {{"computed", d.computed},
                      {"expected", d.expected},
                      {"classification", d.classification},
                      {"singular_values", d.singular_values},
                      {"threshold", d.threshold},
                      {"margin", optional_json(d.margin)},
                      {"dependency", d.dependency}};
  } else {
    j["dimension"] = nullptr;
  }
  j["checks"] = {{"jacobi_residual", optional_json(r.checks.jacobi_residual)},
                 {"operator_max_error", optional_json(r.checks.operator_max_error)},
                 {"random_xi", optional_json(r.checks.random_xi)},
                 {"xi_residual_change", optional_json(r.checks.xi_residual_change)}};
  const auto &t = r.tolerances;
  j["tolerances"] = {{"equality", t.equality},
                     {"closure", t.closure},
                     {"rank", t.rank},
                     {"fd_agreement", t.fd_agreement},
                     {"fd_step", t.fd_step}};
  j["perturb"] = r.perturb;
  j["seed"] = r.seed;
  j["failures"] = r.failures;
  j["passed"] = r.passed;
  j["exit_code"] = r.exit_code;
  return j;
}

RunReport report_from_json(const json &j)
{
  RunReport r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != 1)
    throw Error("unsupported report schema " + std::to_string(r.schema));
  r.command = j.at("command").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.extension_present = j.at("extension_present").get<bool>();
  r.ctype = optional_from<std::string>(j, "ctype");
  r.a0_square_sign = optional_from<int>(j, "a0_square_sign");
  if (!j.at("generators").is_null()) {
    const auto &gj = j.at("generators");
    GeneratorData g;
    g.mode = gj.at("mode").get<std::string>();
    for (const auto &m : gj.at("subgroup"))
      g.subgroup.push_back(matrix_from(m));
    for (const auto &m : gj.at("coset"))
      g.coset.push_back(matrix_from(m));
    g.coset_present = gj.at("coset_present").get<bool>();
    g.fd_exact_max_diff = gj.at("fd_exact_max_diff").get<double>();
    r.generators = std::move(g);
  }
  if (!j.at("structure_constants").is_null()) {
    const auto &sj = j.at("structure_constants");
    r.structure_constants = StructureData{sj.at("n").get<int>(), doubles(sj.at("c")), doubles(sj.at("residuals")),
                                          sj.at("closed").get<bool>()};
  }
  for (const auto &cj : j.at("closure")) {
    ClosureData c;
    c.family = cj.at("family").get<std::string>();
    c.tolerance = cj.at("tolerance").get<double>();
    c.passed = cj.at("passed").get<bool>();
    c.max_residual = cj.at("max_residual").get<double>();
    c.max_complex_residual = cj.at("max_complex_residual").get<double>();
    c.complex_passed = cj.at("complex_passed").get<bool>();
    for (const auto &pj : cj.at("pairs"))
      c.pairs.push_back({pj.at("first").get<int>(), pj.at("second").get<int>(), doubles(pj.at("coeffs")),
                         pj.at("residual").get<double>(), pj.at("complex_residual").get<double>()});
    r.closure.push_back(std::move(c));
  }
  if (!j.at("dimension").is_null()) {
    const auto &dj = j.at("dimension");
    DimensionData d;
    d.computed = dj.at("computed").get<int>();
    d.expected = dj.at("expected").get<int>();
    d.classification = dj.at("classification").get<std::string>();
    d.singular_values = doubles(dj.at("singular_values"));
    d.threshold = dj.at("threshold").get<double>();
    d.margin = optional_from<double>(dj, "margin");
    d.dependency = doubles(dj.at("dependency"));
    r.dimension = std::move(d);
  }
  const auto &cj = j.at("checks");
  r.checks.jacobi_residual = optional_from<double>(cj, "jacobi_residual");
  r.checks.operator_max_error = optional_from<double>(cj, "operator_max_error");
  r.checks.random_xi = optional_from<double>(cj, "random_xi");
  r.checks.xi_residual_change = optional_from<double>(cj, "xi_residual_change");
  const auto &tj = j.at("tolerances");
  r.tolerances.equality = tj.at("equality").get<double>();
  r.tolerances.closure = tj.at("closure").get<double>();
  r.tolerances.rank = tj.at("rank").get<double>();
  r.tolerances.fd_agreement = tj.at("fd_agreement").get<double>();
  r.tolerances.fd_step = tj.at("fd_step").get<double>();
  r.perturb = j.at("perturb").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.passed = j.at("passed").get<bool>();
  r.exit_code = j.at("exit_code").get<int>();
  return r;
}

std::string emit_machine(const RunReport &r)
{
  std::ostringstream out;
  dump(to_json(r), out, 0);
  out << "\n";
  return out.str();
}

RunReport parse_machine(const std::string &text)
{
  return report_from_json(json::parse(text));
}

namespace {

std::string fmt6(double v)
{
  return format_real(v, 6);
}

std::string complex6(std::complex<double> z)
{
  if (z.imag() == 0)
    return fmt6(z.real());
  if (z.real() == 0)
    return fmt6(z.imag()) + "i";
  return fmt6(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt6(std::abs(z.imag())) + "i";
}

void print_matrix(std::ostringstream &out, const std::string &label, const MatrixData &m)
{
  out << "  " << label << " = [";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out << (r ? "; " : "");
    for (std::size_t c = 0; c < m[r].size(); ++c)
      out << (c ? ", " : "") << complex6(m[r][c]);
  }
  out << "]\n";
}

} // namespace

std::string emit_human(const RunReport &r, std::optional<double> wall_time_s)
{
  std::ostringstream out;
  out << "group " << r.group << " (n = " << r.n << ", d = " << r.d << ")\n";
  if (!r.extension_present) {
    out << "extension: absent\n";
  } else if (r.ctype) {
    out << "coirrep type: " << *r.ctype << "\n";
    out << "a0^2 sign: " << (*r.a0_square_sign > 0 ? "+1" : "-1") << "\n";
  }
  if (r.generators) {
    const auto &g = *r.generators;
    out << "generators (" << g.mode << ", fd/exact max diff " << fmt6(g.fd_exact_max_diff) << ")\n";
    for (std::size_t k = 0; k < g.subgroup.size(); ++k)
      print_matrix(out, "X" + std::to_string(k + 1), g.subgroup[k]);
    if (!g.coset_present)
      out << "  coset: absent\n";
    for (std::size_t k = 0; k < g.coset.size(); ++k)
      print_matrix(out, "X'" + std::to_string(k), g.coset[k]);
  }
  if (r.structure_constants) {
    const auto &s = *r.structure_constants;
    out << "structure constants (nonzero c^tau_{sigma rho}, 1-based)\n";
    for (int t = 0; t < s.n; ++t)
      for (int a = 0; a < s.n; ++a)
        for (int b = a + 1; b < s.n; ++b) {
          const double v = s.c[static_cast<std::size_t>((t * s.n + a) * s.n + b)];
          if (std::abs(v) > r.tolerances.closure)
            out << "  c^" << t + 1 << "_{" << a + 1 << b + 1 << "} = " << fmt6(v) << "\n";
        }
  }
  for (const auto &c : r.closure)
    out << "closure " << c.family << ": " << (c.passed ? "PASS" : "FAIL") << " (max residual " << fmt6(c.max_residual)
        << ", complex-span residual " << fmt6(c.max_complex_residual) << ")\n";
  if (r.checks.jacobi_residual)
    out << "jacobi residual: " << fmt6(*r.checks.jacobi_residual) << "\n";
  if (r.checks.operator_max_error)
    out << "operator/matrix bracket max error: " << fmt6(*r.checks.operator_max_error) << "\n";
  if (r.checks.xi_residual_change)
    out << "xi-invariance (xi = " << fmt6(*r.checks.random_xi) << "): residual change "
        << fmt6(*r.checks.xi_residual_change) << "\n";
  if (r.dimension) {
    const auto &d = *r.dimension;
    out << "real algebra dimension: " << d.computed << " (" << d.classification << ", expected " << d.expected;
    if (d.margin)
      out << ", margin " << fmt6(*d.margin);
    out << ")\n";
  }
  for (const auto &f : r.failures)
    out << "failure: " << f << "\n";
  out << "result: " << (r.passed ? "PASS" : "FAIL") << " (exit " << r.exit_code << ")\n";
  if (wall_time_s)
    out << "wall time: " << fmt6(*wall_time_s) << " s\n";
  return out.str();
}

} // namespace corep::cli
