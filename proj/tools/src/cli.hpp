#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgk::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_domain = 2,
    exit_usage = 64,
    exit_io = 74,
};

// Runs one command line (without the program name) and returns the exit
// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgk::cli
