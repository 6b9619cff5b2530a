#ifndef COREP_CLI_REPORT_HPP
#define COREP_CLI_REPORT_HPP

#include "corep/types.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corep::cli {

using MatrixData = std::vector<std::vector<std::complex<double>>>;

struct GeneratorData {
  std::string mode;
  std::vector<MatrixData> subgroup;
  std::vector<MatrixData> coset;
  bool coset_present = false;
  /// Largest entrywise difference between the exact and FD extractions.
  double fd_exact_max_diff = 0;
  bool operator==(const GeneratorData &) const = default;
};

struct StructureData {
  int n = 0;
  std::vector<double> c;          // index (tau * n + sigma) * n + rho
  std::vector<double> residuals;  // row-major n x n
  bool closed = true;
  bool operator==(const StructureData &) const = default;
};

struct PairData {
  int first = 0;
  int second = 0;
  std::vector<double> coeffs;
  double residual = 0;
  double complex_residual = 0;
  bool operator==(const PairData &) const = default;
};

struct ClosureData {
  std::string family;
  std::vector<PairData> pairs;
  double tolerance = 0;
  bool passed = true;
  double max_residual = 0;
  double max_complex_residual = 0;
  bool complex_passed = true;
  bool operator==(const ClosureData &) const = default;
};

struct DimensionData {
  int computed = 0;
  int expected = 0;
  std::string classification;
  std::vector<double> singular_values;
  double threshold = 0;
  /// Absent when no singular value lies on the far side of the threshold.
  std::optional<double> margin;
  std::vector<double> dependency;
  bool operator==(const DimensionData &) const = default;
};

struct CheckData {
  std::optional<double> jacobi_residual;
  std::optional<double> operator_max_error;
  std::optional<double> random_xi;
  std::optional<double> xi_residual_change;
  bool operator==(const CheckData &) const = default;
};

struct RunReport {
  int schema = 1;
  std::string command;
  std::string group;
  int n = 0;
  int d = 0;
  bool extension_present = false;
  std::optional<std::string> ctype;
  std::optional<int> a0_square_sign;
  std::optional<GeneratorData> generators;
  std::optional<StructureData> structure_constants;
  std::vector<ClosureData> closure;
  std::optional<DimensionData> dimension;
  CheckData checks;
  Tolerances tolerances;
  double perturb = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool passed = true;
  int exit_code = 0;

  bool operator==(const RunReport &) const = default;
};

nlohmann::json to_json(const RunReport &r);
RunReport report_from_json(const nlohmann::json &j);

/// Deterministic JSON text: fixed key order, floats with 17 significant digits.
std::string emit_machine(const RunReport &r);
RunReport parse_machine(const std::string &text);

/// Human-readable summary with 6 significant digits.
std::string emit_human(const RunReport &r, std::optional<double> wall_time_s = std::nullopt);

} // namespace corep::cli

#endif // COREP_CLI_REPORT_HPP
