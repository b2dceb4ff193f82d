#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nhydro::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kIoError = 3,
};

/// Entry point of the nhydro tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nhydro::cli
