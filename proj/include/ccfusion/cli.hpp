#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ccfusion {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,          // success, or the instance is a frame
  kExitError = 1,       // usage, parse or hypothesis error
  kExitDegenerate = 2,  // valid input, but not a frame (Bessel-only)
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccfusion
