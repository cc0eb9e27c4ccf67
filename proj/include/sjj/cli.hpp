#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sjj::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitDomain = 3,
    kExitNumerical = 4,
};

// Runs one command line (without the program name). Data goes to `out` when
// no --output file is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sjj::cli
