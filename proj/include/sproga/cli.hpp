#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sproga::cli {

enum ExitCode : int {
  kOk = 0,
  kDataError = 2,
  kDivergence = 3,
  kUsageError = 4,
};

/// Runs one command (`fit`, `generate` or `eval`). The first element of
/// args is the program name. Never throws; failures map to ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sproga::cli
