#ifndef COREP_CLI_CATALOG_HPP
#define COREP_CLI_CATALOG_HPP

#include "corep/group_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace corep::cli {

struct CatalogEntry {
  std::string name;
  std::string description;
  LieGroupSpec<double> group;
  std::optional<AntilinearExtension<double>> extension;
};

/// Builtin groups: so2-conj, su2-tr, u1, so3.
const std::vector<std::string> &catalog_names();

/// Throws ConfigError for unknown names.
CatalogEntry catalog_entry(const std::string &name);

} // namespace corep::cli

#endif // COREP_CLI_CATALOG_HPP
