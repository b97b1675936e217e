#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlsdp::cli {

enum ExitCode : int {
  kOk = 0,
  kRegimeError = 1,
  kNumericalFailure = 2,
  kUsage = 64,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// errors and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlsdp::cli
