#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contrast::cli {

// Process exit codes. Listed in --help; keep stable.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFileNotFound = 2,
  kExitParse = 3,
  kExitInvalidInput = 4,
  kExitBudget = 5,
  kExitVerifyFailed = 6,
};

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contrast::cli
