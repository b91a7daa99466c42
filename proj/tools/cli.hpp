#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlspec::cli {

enum ExitCode : int {
  kOk = 0,
  kVerdictFailure = 1,
  kUsage = 2,
  kDomain = 3,
  kIncomplete = 4,
};

/// Runs one command line (without the program name). Everything the command
/// prints goes to `out`/`err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlspec::cli
