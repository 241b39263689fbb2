#pragma once

#include <string>
#include <vector>

#include "entloc/types.hpp"

namespace entloc::cli {

struct ReproQuantity {
    std::string name;
    cplx computed;  ///< from the operator and state matrices
    cplx expected;  ///< closed form quoted for the worked example
};

struct ReproLine {
    std::string id;
    std::string description;
    std::vector<ReproQuantity> quantities;
    double tolerance = 1e-12;
    double max_abs_error = 0.0;
    bool pass = false;
};

/// Worked examples for the three impossibility settings, each evaluated from
/// first principles and compared with the quoted values.
std::vector<ReproLine> reproduce_paper();

}  // namespace entloc::cli
