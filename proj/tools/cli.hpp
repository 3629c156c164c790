#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace avoidance::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUnexpectedClaim = 1,
  kUsage = 2,
  kTooLarge = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace avoidance::cli
