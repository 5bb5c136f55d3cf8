#pragma once

#include "ybe/qchecks.hpp"

namespace ybe {

// Homogeneous periodic chain built from one of the sl(2) R-matrix families.
struct ChainSpec {
    enum Family { E32, E34, E41 } family = E32;
    int sites = 2;                          // guard: <= 6
    std::map<std::string, RatFunc> params;  // q, z2, a, b, eta, xi as values or symbols
};

// registry used by the chain computations
VarSetPtr chain_vars();

// R-matrix of the family on legs (ua, ub)
MatRF chain_r(const ChainSpec& spec, const std::string& ua, const std::string& ub);

// t(z) = tr_0 R_{0N}(z, z2) ... R_{01}(z, z2)
MatRF transfer_matrix(const ChainSpec& spec, const std::string& zname);

// [t(z'), t(z'')], symbolic or at sampled rational points
struct CommuteReport {
    bool zero = true;
    int samples_checked = 0;
};
CommuteReport commute_check_symbolic(const ChainSpec& spec);
CommuteReport commute_check_sampled(const ChainSpec& spec, int npairs, unsigned long long seed);

// logarithmic-derivative Hamiltonian and the printed nearest-neighbour form
MatRF hamiltonian_from_transfer(const ChainSpec& spec);
MatRF hamiltonian_closed_form(const ChainSpec& spec);
// closed-form coupling constants of the family
std::pair<RatFunc, RatFunc> hamiltonian_constants(const ChainSpec& spec);

// difference of the two Hamiltonians; must be an exact multiple of Id
struct ScalarGap {
    bool scalar = false;
    RatFunc value;
};
ScalarGap hamiltonian_scalar_gap(const ChainSpec& spec);

// [H_closed, t(z)] at random rational points
bool integrability_smoke(const ChainSpec& spec, int npoints, unsigned long long seed);

// deterministic prime sampler used by every sampled check
Rational sample_prime(unsigned long long& state);

} // namespace ybe
