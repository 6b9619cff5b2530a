#ifndef COREP_CLI_CONFIG_HPP
#define COREP_CLI_CONFIG_HPP

#include "corep/group_core.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace corep::cli {

class ConfigError : public Error {
public:
  using Error::Error;
};

struct GroupConfig {
  /// Catalog name, or "explicit" for inline generators.
  std::string source;
  LieGroupSpec<double> group;
  std::optional<AntilinearExtension<double>> extension;
  Tolerances tol;
  double perturb = 0;
};

/// Parses a config document. Complex numbers are [re, im] pairs and
/// matrices are row-major nested arrays. Errors name the offending field.
GroupConfig parse_config(const nlohmann::json &doc);

/// Reads and parses a config file; syntax errors report line and column.
GroupConfig load_config_file(const std::filesystem::path &path);

GroupConfig config_from_catalog(const std::string &name);

/// Matrix from a row-major nested array of [re, im] pairs.
ComplexMatrix parse_complex_matrix(const nlohmann::json &j, const std::string &field);

/// Adds `amount` to entry (0, 0) of the first generator.
LieGroupSpec<double> perturbed(const LieGroupSpec<double> &group, double amount);

/// Copy of the extension with new xi / delta-alpha0.
AntilinearExtension<double> with_phases(const AntilinearExtension<double> &ext, double xi, double delta_alpha0);

} // namespace corep::cli

#endif // COREP_CLI_CONFIG_HPP
