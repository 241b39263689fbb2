#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entloc::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInput = 2,
    kExitReproduceFail = 3,
    kExitConsistency = 4,
    kExitDimension = 5,
    kExitZeroNorm = 6,
};

/// Runs the command line (args excludes the program name). The report goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entloc::cli
