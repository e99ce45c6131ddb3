#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collatz::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResourceLimit = 3,
};

/// Runs one invocation. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz::cli
