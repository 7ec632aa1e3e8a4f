#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqsym::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kParseError = 2,
  kVerifyFailed = 3,
};

/// Runs one command.  `args` excludes the program name.  Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqsym::cli
