#pragma once

#include <ostream>

namespace hmap {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,        // success, or predicate true
    exit_false = 1,     // predicate false
    exit_usage = 2,     // usage, parse or precondition error
};

/// Runs the hmap command line. Output goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hmap
