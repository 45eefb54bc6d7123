#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcheq {

enum ExitStatus : int {
    kExitOk = 0,      // success, ok, equal
    kExitFailed = 1,  // violation, differs
    kExitUsage = 2,   // usage or input error
};

/// Runs the command-line driver. `args` excludes the program name.
/// Commands: solve, verify, compare, enumerate-init.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace latcheq
