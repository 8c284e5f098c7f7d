#pragma once

#include <iosfwd>

namespace atlas::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_size_guard = 3 };

/// Entry point behind the executable; `out` receives JSON when no output
/// file is given, `err` receives messages and the summary line.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace atlas::cli
