#pragma once

#include <complex>

#include "ybe/solutions.hpp"

namespace ybe {

// Numeric probe (the only floating-point surface): integrates the holonomy
// equation z dPsi/dz = ad(h(z)) Psi from z = 1 with fixed-step RK4, undresses
// X by Psi^{-1} on both legs and checks that the result depends only on the
// ratio of the spectral points.  Never part of exact acceptance.
struct OdeProbeReport {
    bool pass = false;
    bool inconclusive = false;
    double max_deviation = 0.0;
};

OdeProbeReport psi_ode_probe(const Solution& x,
                             const std::vector<std::pair<std::complex<double>,
                                                         std::complex<double>>>& sample_pairs,
                             double tol);

} // namespace ybe
