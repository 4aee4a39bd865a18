#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orient {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // --verify mismatch or internal error
  kExitParse = 2,
  kExitInfeasible = 3,
  kExitSizeBound = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orient
