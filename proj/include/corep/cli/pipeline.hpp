#ifndef COREP_CLI_PIPELINE_HPP
#define COREP_CLI_PIPELINE_HPP

#include "corep/cli/config.hpp"
#include "corep/cli/report.hpp"
#include "corep/infinitesimal.hpp"

#include <cstdint>

namespace corep::cli {

enum class Stage { classify, generators, commutators, verify };

enum ExitCode : int {
  exit_pass = 0,
  exit_config = 1,
  exit_inconsistent = 2,
  exit_closure = 3,
  exit_differentiation = 4,
};

struct PipelineOptions {
  Stage stage = Stage::verify;
  ExtractionMode mode = ExtractionMode::exact;
  std::uint64_t seed = 20261016;
};

/// Runs every stage up to `opts.stage`. Closure failures are recorded in
/// the report (exit_code 3); inconsistent extensions and differentiation
/// failures propagate as exceptions.
RunReport run_pipeline(const GroupConfig &config, const PipelineOptions &opts);

/// Seed from COREP_LIE_SEED, falling back to the default.
std::uint64_t seed_from_env(std::uint64_t fallback = PipelineOptions{}.seed);

} // namespace corep::cli

#endif // COREP_CLI_PIPELINE_HPP
