#include "corep/cli/app.hpp"
#include "corep/cli/catalog.hpp"
#include "corep/cli/pipeline.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace corep;
using namespace corep::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "corep-lie");
  std::ostringstream out, err;
  const int code = run_app(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes `text` to a fresh file under the temp directory.
std::filesystem::path temp_config(const std::string &stem, const std::string &text)
{
  const auto path = std::filesystem::temp_directory_path() / ("corep_test_" + stem + ".json");
  std::ofstream(path) << text;
  return path;
}

std::string error_of(const json &doc)
{
  try {
    parse_config(doc);
  } catch (const ConfigError &e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("catalog entries load and classify")
{
  CHECK(catalog_names() == std::vector<std::string>{"so2-conj", "su2-tr", "u1", "so3"});
  for (const auto &name : catalog_names()) {
    const auto entry = catalog_entry(name);
    REQUIRE(entry.extension);
    CHECK(entry.extension->d() == entry.group.d());
    CHECK_NOTHROW(classify_coirrep(entry.group, *entry.extension));
  }
  CHECK(classify_coirrep(*catalog_entry("so2-conj").extension) == CoirrepType::a);
  CHECK(classify_coirrep(*catalog_entry("su2-tr").extension) == CoirrepType::b);
  CHECK_THROWS_AS(catalog_entry("sp4"), ConfigError);
}

TEST_CASE("config parsing: explicit groups and field-precise errors")
{
  const json so2 = {{"group", {{"n", 1}, {"d", 2}, {"generators", {{{{0, 0}, {-1, 0}}, {{1, 0}, {0, 0}}}}}}},
                    {"extension", {{"N", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}}, {"s", 1}, {"xi", 0.5}}}};
  const auto cfg = parse_config(so2);
  CHECK(cfg.source == "explicit");
  CHECK(cfg.group.n() == 1);
  REQUIRE(cfg.extension);
  CHECK(cfg.extension->xi == 0.5);
  CHECK(cfg.extension->delta_alpha0 == 0);

  json doc = so2;
  doc["extension"]["delta-alpha0"] = 0.25;
  CHECK(parse_config(doc).extension->delta_alpha0 == 0.25);

  doc = so2;
  doc["extension"] = json::object();
  CHECK_FALSE(parse_config(doc).extension);

  doc = so2;
  doc["group"]["generators"][0][1][0] = {1, 0, 3};
  CHECK(error_of(doc).starts_with("group.generators[0][1][0]"));

  doc = so2;
  doc["extension"]["s"] = 2;
  CHECK(error_of(doc) == "extension.s: expected +1 or -1");

  doc = so2;
  doc["extension"]["N"] = {{{1, 0}}};
  CHECK(error_of(doc).starts_with("extension.N"));

  doc = so2;
  doc["group"]["n"] = 0;
  CHECK(error_of(doc) == "group.n: expected a positive integer");

  doc = so2;
  doc["colour"] = "red";
  CHECK(error_of(doc) == "colour: unknown field");

  doc = so2;
  doc["tolerances"] = {{"closure", -1}};
  CHECK(error_of(doc) == "tolerances.closure: must be positive");

  CHECK(error_of(json{{"group", "su2-tr"}, {"tolerances", {{"closure", 1e-6}}}}).empty());
  CHECK(parse_config(json{{"group", "su2-tr"}, {"tolerances", {{"closure", 1e-6}}}}).tol.closure == 1e-6);
}

TEST_CASE("config files: syntax errors carry line and column")
{
  const auto path = temp_config("syntax", "{\n  \"group\": \"su2-tr\",\n  \"extension\": {\"N\": [[1, 0]],,\n}\n");
  try {
    load_config_file(path);
    FAIL("expected a ConfigError");
  } catch (const ConfigError &e) {
    const std::string msg = e.what();
    CHECK(msg.find(path.string() + ":3:") == 0);
  }
  CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("machine report: round trip and deterministic emission")
{
  for (const auto &name : catalog_names()) {
    const auto report = run_pipeline(config_from_catalog(name), {});
    const auto text = emit_machine(report);
    CHECK(parse_machine(text) == report);
    CHECK(emit_machine(parse_machine(text)) == text);
    CHECK(emit_machine(run_pipeline(config_from_catalog(name), {})) == text);
  }
  RunReport bare;
  bare.command = "classify";
  bare.group = "x";
  CHECK(parse_machine(emit_machine(bare)) == bare);
}

TEST_CASE("classify exit codes")
{
  auto r = run({"classify", "--group", "so2-conj"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coirrep type: a") != std::string::npos);
  CHECK(r.out.find("a0^2 sign: +1") != std::string::npos);

  r = run({"classify", "--group", "su2-tr", "--format", "machine"});
  CHECK(r.code == 0);
  const auto rep = parse_machine(r.out);
  CHECK(rep.ctype == "b");
  CHECK(rep.a0_square_sign == -1);

  const auto bad = temp_config("diag12", R"({"group": "so2-conj", "extension": {"N": [[[1,0],[0,0]],[[0,0],[2,0]]], "s": 1}})");
  r = run({"classify", "--config", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("inconsistent extension") != std::string::npos);
  std::filesystem::remove(bad);

  const auto malformed = temp_config("malformed", R"({"group": "so2-conj", "extension": {"s": 1}})");
  r = run({"classify", "--config", malformed.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("extension.N: missing") != std::string::npos);
  std::filesystem::remove(malformed);

  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--group", "nope"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("verify exit codes")
{
  CHECK(run({"verify", "--group", "so2-conj"}).code == 0);
  CHECK(run({"verify", "--group", "so3"}).code == 0);
  // Real-span closure fails for su2-tr (see the README); the report is still emitted.
  auto r = run({"verify", "--group", "su2-tr", "--format", "machine"});
  CHECK(r.code == 3);
  const auto rep = parse_machine(r.out);
  CHECK(rep.exit_code == 3);
  REQUIRE(rep.dimension);
  CHECK(rep.dimension->computed == 7);
  CHECK_FALSE(rep.failures.empty());

  r = run({"verify", "--group", "so3", "--perturb", "1e-2", "--format", "machine"});
  CHECK(r.code == 3);
  CHECK(parse_machine(r.out).perturb == 1e-2);

  CHECK(run({"report", "--group", "su2-tr"}).code == 0);
  CHECK(run({"verify", "--group", "so2-conj", "--tol", "-1"}).code == 1);
}

TEST_CASE("generators listing: exact and fd agree, empty extension omits the coset")
{
  const auto exact = parse_machine(run({"generators", "--group", "su2-tr", "--format", "machine"}).out);
  const auto fd = parse_machine(run({"generators", "--group", "su2-tr", "--mode", "fd", "--format", "machine"}).out);
  REQUIRE(exact.generators);
  REQUIRE(fd.generators);
  CHECK(exact.generators->coset.size() == 4);
  CHECK(fd.generators->mode == "fd");
  double diff = 0;
  for (std::size_t k = 0; k < exact.generators->coset.size(); ++k)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        diff = std::max(diff, std::abs(exact.generators->coset[k][i][j] - fd.generators->coset[k][i][j]));
  CHECK(diff < 1e-6);

  const auto plain = temp_config("noext", R"({"group": "su2-tr", "extension": {}})");
  const auto r = run({"generators", "--config", plain.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("X'") == std::string::npos);
  std::filesystem::remove(plain);
}

TEST_CASE("seed comes from the environment")
{
  ::setenv("COREP_LIE_SEED", "7", 1);
  const auto a = parse_machine(run({"verify", "--group", "so2-conj", "--format", "machine"}).out);
  ::setenv("COREP_LIE_SEED", "8", 1);
  const auto b = parse_machine(run({"verify", "--group", "so2-conj", "--format", "machine"}).out);
  ::unsetenv("COREP_LIE_SEED");
  CHECK(a.seed == 7);
  CHECK(b.seed == 8);
  CHECK(a.checks.random_xi != b.checks.random_xi);
  CHECK(seed_from_env() == PipelineOptions{}.seed);
}
