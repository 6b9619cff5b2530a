#include "corep/cli/app.hpp"
#include "corep/cli/catalog.hpp"
#include "corep/cli/pipeline.hpp"

#include <CLI11.hpp>

#include <chrono>

namespace corep::cli {

namespace {

struct Options {
  std::string config_path;
  std::string group;
  std::string mode = "exact";
  std::string format = "human";
  std::optional<double> xi;
  std::optional<double> delta_alpha0;
  std::optional<double> tol;
  std::optional<double> perturb;
};

GroupConfig resolve_config(const Options &o)
{
  if (o.config_path.empty() && o.group.empty())
    throw ConfigError("one of --config or --group is required");
  if (!o.config_path.empty() && !o.group.empty())
    throw ConfigError("--config and --group are mutually exclusive");
  GroupConfig cfg = o.group.empty() ? load_config_file(o.config_path) : config_from_catalog(o.group);
  if ((o.xi || o.delta_alpha0) && cfg.extension) {
    cfg.extension = with_phases(*cfg.extension, o.xi.value_or(cfg.extension->xi),
                                o.delta_alpha0.value_or(cfg.extension->delta_alpha0));
  }
  if (o.tol) {
    if (!(*o.tol > 0))
      throw ConfigError("--tol: must be positive");
    cfg.tol.closure = *o.tol;
  }
  if (o.perturb)
    cfg.perturb = *o.perturb;
  return cfg;
}

} // namespace

int run_app(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Infinitesimal-operator algebras of groups G + a0 G with an antilinear a0"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, Stage>> commands{
      {"classify", Stage::classify},
      {"generators", Stage::generators},
      {"commutators", Stage::commutators},
      {"verify", Stage::verify},
      {"report", Stage::verify},
  };
  const std::map<std::string, std::string> help{
      {"classify", "Coirrep type and the sign of a0^2"},
      {"generators", "Subgroup and coset generator listings"},
      {"commutators", "Structure constants and the three bracket families"},
      {"verify", "Full run; exit code reflects every check"},
      {"report", "Full run; always emits the report (exit 3 is not used)"},
  };
  for (const auto &[name, stage] : commands) {
    auto *sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", o.config_path, "JSON config file");
    sub->add_option("--group", o.group, "Builtin catalog group")->check(CLI::IsMember(catalog_names()));
    sub->add_option("--mode", o.mode, "Generator extraction mode")->check(CLI::IsMember({"exact", "fd"}));
    sub->add_option("--xi", o.xi, "Phase xi with mu/lambda = exp(i xi)");
    sub->add_option("--delta-alpha0", o.delta_alpha0, "Coset phase shift used by the transport map");
    sub->add_option("--tol", o.tol, "Closure tolerance (Frobenius)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--perturb", o.perturb, "Add this amount to entry (0,0) of the first generator");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty())
    rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? exit_pass : exit_config;
  }

  const auto *chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Stage stage = Stage::verify;
  for (const auto &[name, s] : commands)
    if (name == command)
      stage = s;

  try {
    const GroupConfig cfg = resolve_config(o);
    PipelineOptions opts;
    opts.stage = stage;
    opts.mode = o.mode == "fd" ? ExtractionMode::finite_difference : ExtractionMode::exact;
    opts.seed = seed_from_env();
    const auto start = std::chrono::steady_clock::now();
    RunReport report = run_pipeline(cfg, opts);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.command = command;
    if (command == "report" && report.exit_code == exit_closure)
      report.exit_code = exit_pass;
    if (o.format == "machine")
      out << emit_machine(report);
    else
      out << emit_human(report, elapsed.count());
    return report.exit_code;
  } catch (const ConfigError &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const InconsistentExtension &e) {
    err << e.what() << "\n";
    return exit_inconsistent;
  } catch (const DifferentiationError &e) {
    err << e.what() << "\n";
    return exit_differentiation;
  } catch (const Error &e) {
    err << "config error: " << e.what() << "\n";
    return exit_config;
  }
}

} // namespace corep::cli
