#include "corep/cli/config.hpp"
#include "corep/cli/catalog.hpp"

#include <fstream>
#include <sstream>

namespace corep::cli {

using nlohmann::json;

namespace {

std::string at(const std::string &field, std::size_t k)
{
  return field + "[" + std::to_string(k) + "]";
}

double parse_real(const json &j, const std::string &field)
{
  if (!j.is_number())
    throw ConfigError(field + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw ConfigError(field + ": not finite");
  return v;
}

std::complex<double> parse_complex(const json &j, const std::string &field)
{
  if (!j.is_array() || j.size() != 2)
    throw ConfigError(field + ": expected a [re, im] pair");
  return {parse_real(j[0], at(field, 0)), parse_real(j[1], at(field, 1))};
}

std::string describe(const json &j)
{
  return std::string(j.type_name());
}

template <typename F>
auto wrap(const std::string &field, F &&f)
{
  try {
    return f();
  } catch (const ConfigError &) {
    throw;
  } catch (const Error &e) {
    throw ConfigError(field + ": " + e.what());
  }
}

Tolerances parse_tolerances(const json &j, Tolerances tol)
{
  if (!j.is_object())
    throw ConfigError("tolerances: expected an object, got " + describe(j));
  for (const auto &[key, value] : j.items()) {
    const std::string field = "tolerances." + key;
    const double v = parse_real(value, field);
    if (!(v > 0))
      throw ConfigError(field + ": must be positive");
    if (key == "equality")
      tol.equality = v;
    else if (key == "closure")
      tol.closure = v;
    else if (key == "rank")
      tol.rank = v;
    else if (key == "fd_agreement")
      tol.fd_agreement = v;
    else if (key == "fd_step")
      tol.fd_step = v;
    else
      throw ConfigError(field + ": unknown tolerance");
  }
  return tol;
}

LieGroupSpec<double> parse_explicit_group(const json &j, double rank_tol)
{
  for (const char *key : {"n", "d", "generators"})
    if (!j.contains(key))
      throw ConfigError(std::string("group.") + key + ": missing");
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1)
    throw ConfigError("group.n: expected a positive integer");
  if (!j["d"].is_number_integer() || j["d"].get<int>() < 1)
    throw ConfigError("group.d: expected a positive integer");
  const int n = j["n"].get<int>();
  const int d = j["d"].get<int>();
  const auto &gens = j["generators"];
  if (!gens.is_array() || static_cast<int>(gens.size()) != n)
    throw ConfigError("group.generators: expected an array of " + std::to_string(n) + " matrices");
  std::vector<ComplexMatrix> mats;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto field = at("group.generators", k);
    auto m = parse_complex_matrix(gens[k], field);
    if (m.rows() != d || m.cols() != d)
      throw ConfigError(field + ": expected " + std::to_string(d) + "x" + std::to_string(d));
    mats.push_back(std::move(m));
  }
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "explicit";
  return wrap("group", [&] { return LieGroupSpec<double>(name, std::move(mats), rank_tol); });
}

std::optional<AntilinearExtension<double>> parse_extension(const json &j, double rank_tol)
{
  if (j.is_null() || (j.is_object() && j.empty()))
    return std::nullopt;
  if (!j.is_object())
    throw ConfigError("extension: expected an object, got " + describe(j));
  if (!j.contains("N"))
    throw ConfigError("extension.N: missing");
  auto n = parse_complex_matrix(j["N"], "extension.N");
  int s = 1;
  if (j.contains("s")) {
    if (!j["s"].is_number_integer() || (j["s"].get<int>() != 1 && j["s"].get<int>() != -1))
      throw ConfigError("extension.s: expected +1 or -1");
    s = j["s"].get<int>();
  }
  const double xi = j.contains("xi") ? parse_real(j["xi"], "extension.xi") : 0.0;
  const double alpha0 = j.contains("alpha0") ? parse_real(j["alpha0"], "extension.alpha0") : 0.0;
  double shift = 0.0;
  for (const char *key : {"delta_alpha0", "delta-alpha0"})
    if (j.contains(key))
      shift = parse_real(j[key], std::string("extension.") + key);
  return wrap("extension", [&] { return AntilinearExtension<double>(std::move(n), s, xi, alpha0, shift, rank_tol); });
}

} // namespace

ComplexMatrix parse_complex_matrix(const json &j, const std::string &field)
{
  if (!j.is_array() || j.empty())
    throw ConfigError(field + ": expected a non-empty array of rows");
  const auto rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw ConfigError(at(field, 0) + ": expected a non-empty row");
  const auto cols = j[0].size();
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row_field = at(field, r);
    if (!j[r].is_array() || j[r].size() != cols)
      throw ConfigError(row_field + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = parse_complex(j[r][c], at(row_field, c));
  }
  return m;
}

GroupConfig config_from_catalog(const std::string &name)
{
  auto entry = catalog_entry(name);
  return {entry.name, std::move(entry.group), std::move(entry.extension), Tolerances{}, 0.0};
}

GroupConfig parse_config(const json &doc)
{
  if (!doc.is_object())
    throw ConfigError("config: expected a JSON object at top level");
  for (const auto &[key, value] : doc.items())
    if (key != "group" && key != "extension" && key != "tolerances" && key != "perturb")
      throw ConfigError(key + ": unknown field");
  if (!doc.contains("group"))
    throw ConfigError("group: missing");

  Tolerances tol;
  if (doc.contains("tolerances"))
    tol = parse_tolerances(doc["tolerances"], tol);

  const auto &g = doc["group"];
  std::optional<GroupConfig> cfg;
  if (g.is_string()) {
    cfg = config_from_catalog(g.get<std::string>());
  } else if (g.is_object()) {
    cfg.emplace(GroupConfig{"explicit", parse_explicit_group(g, tol.rank), std::nullopt, tol, 0.0});
  } else {
    throw ConfigError("group: expected a catalog name or an object, got " + describe(g));
  }
  cfg->tol = tol;

  if (doc.contains("extension")) {
    cfg->extension = parse_extension(doc["extension"], tol.equality);
    if (cfg->extension && cfg->extension->d() != cfg->group.d())
      throw ConfigError("extension.N: expected " + std::to_string(cfg->group.d()) + "x" +
                        std::to_string(cfg->group.d()) + " to match the group");
  }
  if (doc.contains("perturb"))
    cfg->perturb = parse_real(doc["perturb"], "perturb");
  return std::move(*cfg);
}

GroupConfig load_config_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": JSON syntax error: " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

LieGroupSpec<double> perturbed(const LieGroupSpec<double> &group, double amount)
{
  auto gens = group.generators();
  gens.front()(0, 0) += amount;
  return LieGroupSpec<double>(group.name(), std::move(gens));
}

AntilinearExtension<double> with_phases(const AntilinearExtension<double> &ext, double xi, double delta_alpha0)
{
  return AntilinearExtension<double>(ext.N, ext.s, xi, ext.alpha0, delta_alpha0);
}

} // namespace corep::cli
