#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ising::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kModelError = 2,
  kNumericFailure = 3,
};

// Runs one command line (without the program name). The report goes to out,
// diagnostics to err.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ising::cli
