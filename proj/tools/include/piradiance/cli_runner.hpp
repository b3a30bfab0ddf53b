#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace piradiance::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kPinError = 3,
  kUnknownLaw = 4,
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace piradiance::cli
