#pragma once

#include <ostream>

namespace cauchy_sketch {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitIo = 3 };

/// Entry point of `cauchy-sketch`; writes results to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cauchy_sketch
