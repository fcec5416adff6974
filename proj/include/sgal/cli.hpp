#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgal::cli {

enum ExitCode : int {
  kOk = 0,
  kSelfcheckFailed = 1,
  kParseError = 2,
  kDomainError = 3,
  kIoError = 4,
  kOrderingError = 5,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sgal::cli
