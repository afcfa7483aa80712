#pragma once

#include <ostream>

namespace tcs::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kError = 2 };

/// The whole command line, writing to the given streams; returns the exit
/// code. main() forwards to this so tests can run commands in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tcs::cli
