#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cca::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
};

/// Runs one invocation of the `cca` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cca::cli
