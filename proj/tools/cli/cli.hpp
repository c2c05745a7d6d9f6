#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kValidationError = 2,
  kPrecisionExhausted = 3,
};

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
