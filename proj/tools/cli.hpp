#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kUnequal = 2 };

/// Runs the command line (without the program name) and returns the
/// process exit code: 0 on success or EQUAL, 1 on usage, parse or
/// precondition errors, 2 when any checked identity is UNEQUAL.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
