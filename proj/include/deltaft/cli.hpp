#pragma once

#include <string>
#include <vector>

namespace deltaft {

/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Pure apart from
/// reading the files named on the command line.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace deltaft
