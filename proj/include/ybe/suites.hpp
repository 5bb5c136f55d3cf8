#pragma once

#include "ybe/report.hpp"

namespace ybe {

// Named verification suites shared by the command line tool and the
// acceptance harness. Sampled checks draw their points from the seed.
VerificationReport suite_cybe();
VerificationReport suite_unitarity();
VerificationReport suite_oracle(unsigned long long seed);
VerificationReport suite_bd_enumeration();
VerificationReport suite_cartan_solvers();
VerificationReport suite_cg_identities();
VerificationReport suite_quantum_presentation();
VerificationReport suite_qybe();
VerificationReport suite_cocycle();
VerificationReport suite_semiclassical();
VerificationReport suite_spin_chains(unsigned long long seed);
VerificationReport suite_seaweed();
VerificationReport suite_pde(unsigned long long seed);

// number of worker threads honoring YBE_FORGE_THREADS (>=1)
int thread_cap();

} // namespace ybe
