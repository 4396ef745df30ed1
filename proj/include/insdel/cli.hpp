#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace insdel {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_domain = 3,
    exit_capacity = 4,
};

/// Runs one command line (without the program name). Regular output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace insdel
