#pragma once

#include <iosfwd>

namespace arshon {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1,
    exit_usage = 2,
    exit_io = 3,
};

/// Entry point of the `arshon` tool. Reports go to `out` (or the --out
/// file), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace arshon
