#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfpscsc::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 2,
  kUnbounded = 3,
  kInputError = 4,
  kNumericalFailure = 5,
};

// Runs the command line tool. `args` excludes the program name. The report
// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfpscsc::cli
