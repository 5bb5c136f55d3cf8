#pragma once

#include "ybe/solutions.hpp"

namespace ybe {

// Cartan-valued polynomial h(z) certifying the scaling identity
// z1 dX/dz1 + z2 dX/dz2 = [h(z1) (x) 1 + 1 (x) h(z2), X].
// The contraction candidate (bracket of the polynomial part on the diagonal,
// scaled by the Casimir constant) is used when it works; otherwise the
// identity is solved exactly for a polynomial h of bounded degree.
LieElement h_of_z(const Solution& x);

// residual of the identity for the h chosen by h_of_z; exact zero certifies it
Tensor2 pde_residual(const Solution& x);

// the contraction formula by itself (degree-scaled bracket contraction)
LieElement h_contraction_candidate(const Solution& x);

} // namespace ybe
