#pragma once

#include "ybe/qtwist.hpp"

namespace ybe {

// Verifies the correspondence between the block subalgebra of gl_{N+1} and
// its current-algebra realization inside gl_N[u]: (a) the realized generator
// images satisfy the subalgebra relations in the evaluation representation,
// (b) the Cartan-twisted coproducts of corresponding generators take the same
// closed form on both sides.
struct SeaweedReport {
    int checked = 0;
    int failed = 0;
    std::string first_failure;
    bool ok() const { return failed == 0; }
};

SeaweedReport seaweed_iso_check(int N);

} // namespace ybe
