#ifndef COREP_CLI_APP_HPP
#define COREP_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace corep::cli {

/// Entry point shared by the executable and the tests; returns the exit code.
int run_app(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace corep::cli

#endif // COREP_CLI_APP_HPP
