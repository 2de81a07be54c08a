#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gasp::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kLimitExceeded = 3,
  kViolation = 4,
};

/// Runs one `gasp` invocation. `args` excludes the program name; `-` (or a
/// missing input) reads the program from `in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace gasp::cli
