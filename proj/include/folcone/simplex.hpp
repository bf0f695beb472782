#pragma once

// Exact rational feasibility solver for systems  A x = b, x >= 0  via a
// phase-one simplex with Bland's rule. Either outcome carries a certificate
// that can be re-checked with plain arithmetic:
//   feasible   -> x with A x = b, x >= 0
//   infeasible -> y with  y^T A <= 0  componentwise and  y^T b > 0
// (any x would give 0 >= y^T A x = y^T b > 0, so no solution exists).

#include <optional>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

struct FeasibilityResult {
    bool feasible = false;
    QVec x;       // set when feasible
    QVec farkas;  // set when infeasible
};

FeasibilityResult solve_equality_feasibility(const std::vector<QVec>& a_rows, const QVec& b);

// Convenience entry point for integer data.
FeasibilityResult solve_equality_feasibility(const std::vector<ZVec>& a_rows, const ZVec& b);

} // namespace folcone
