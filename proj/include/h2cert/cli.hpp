#pragma once

#include <string>
#include <vector>

#include "h2cert/json_io.hpp"

namespace h2cert {

struct CliOutcome {
  int exit_code = 0;
  std::string out;  // exactly one JSON document on success, empty on usage errors
  std::string err;
};

/// args excludes the program name: {"sieve-find", "--p", "2", ...}.
/// Exit 0 on success, 1 when an asserted property fails, 2 on usage and
/// algebra errors.
CliOutcome run_cli(const std::vector<std::string>& args);

/// Arguments that rerun the invocation recorded in a report.
std::vector<std::string> replay_args(const Json& report);

const std::vector<std::string>& cli_commands();

}  // namespace h2cert
