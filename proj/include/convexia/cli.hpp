#pragma once

#include <iosfwd>

namespace convexia {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailures = 1, kExitParse = 2, kExitClass = 3, kExitBudget = 4 };

/// Entry point of the `convexia` tool with injectable streams.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace convexia
