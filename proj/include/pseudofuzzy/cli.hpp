#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudofuzzy::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kDomainError = 3,
  kKindMismatch = 4,
  kDivisorError = 5,
};

/// Runs one command line. `args` excludes the program name. Input named "-"
/// is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pseudofuzzy::cli
