#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fermat/error.hpp"

namespace fermat::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kWorkLimitExceeded = 2,
  kPipelineMismatch = 3,
};

/// Exit code reported for a library error.
int exit_code(ErrorCode code);

/// Parses argv (argv[0] is the program name), dispatches to the subcommand
/// and writes the result to out. Diagnostics go to err; nothing is written
/// to out on failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
