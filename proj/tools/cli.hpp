#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidon::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,         // bad flags or parameters outside the solved cases
  kVerification = 3,  // independent computations disagreed
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
