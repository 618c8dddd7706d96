#pragma once

#include <ostream>

namespace harmony::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_validation = 3,
    exit_violation = 4,
};

/// Entry point of the `harmony` tool; `out` receives reports written to
/// stdout and `err` receives diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmony::cli
