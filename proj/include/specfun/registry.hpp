#pragma once

#include <string>
#include <vector>

#include "specfun/derivatives.hpp"
#include "specfun/grid.hpp"

namespace specfun {

struct BuiltinFunction {
    std::string id;
    std::string summary;
    RealFn f;
    DerivChain chain;             // null when only values are available
    bool inclusion_suite = true;  // excluded entries skip the class-pair sweep
};

const std::vector<BuiltinFunction>& builtin_registry();

// UsageError for ids not in the registry.
const BuiltinFunction& find_builtin(const std::string& id);

struct InclusionViolation {
    std::string id;
    std::string relation;
};

// Runs the class scans over every inclusion-suite entry and reports verdict
// pairs that contradict S_1 in S_2, S_lambda in CM, LCM in CM, or B_1 in B_2.
// An entry whose LCM scan throws NonPositive simply skips the LCM pair.
std::vector<InclusionViolation> class_inclusion_violations(
    const Grid& grid = Grid(0.05, 20.0, 40, Spacing::log), double tol = 1e-7);

}  // namespace specfun
