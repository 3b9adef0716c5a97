#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcurv::cli {

enum ExitStatus : int {
  kOk = 0,
  kInvalidArguments = 1,
  kVerificationFailed = 2,
  kNotConverged = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tcurv::cli
