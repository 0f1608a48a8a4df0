#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sqmat::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kShapeError = 3,
  kNoSolution = 4,
  kSingular = 5,
  kNumericFailure = 6,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (or the --output file), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sqmat::cli
