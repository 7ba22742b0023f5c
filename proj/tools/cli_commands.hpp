#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rieszkit::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidConfig = 2,
  kNotFound = 3,
  kIoError = 4,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rieszkit::cli
