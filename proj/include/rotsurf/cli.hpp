#pragma once

#include <ostream>

namespace rotsurf {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Entry point of the `rotsurf` tool; subcommands verify, brackets, sample, curvature.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rotsurf
