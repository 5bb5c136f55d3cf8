// Acceptance harness: runs every gate criterion of the workbench and prints
// one PASS/FAIL line per criterion. Exit status is nonzero when any criterion
// fails. Three criteria carry documented reds inherited from defects in the
// published formulas (one catalogued rational sl(3) entry and the two printed
// sl(3) rational twist products); they are reported as failures, not patched.

#include "ybe/chain.hpp"
#include "ybe/cybe.hpp"
#include "ybe/io.hpp"
#include "ybe/suites.hpp"

#include <chrono>
#include <iostream>

using namespace ybe;

namespace {

int failures = 0;

void line(int idx, const std::string& name, bool ok, const std::string& note = "") {
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] criterion " << idx << ": " << name;
    if (!note.empty()) std::cout << "  -- " << note;
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string summarize(const VerificationReport& rep) {
    int pass = 0, fail = 0, inc = 0;
    std::string failing;
    for (const auto& c : rep.checks) {
        if (c.status == CheckRecord::pass) ++pass;
        else if (c.status == CheckRecord::fail) {
            ++fail;
            failing += (failing.empty() ? "" : ", ") + c.name;
        } else ++inc;
    }
    std::string s = std::to_string(pass) + " pass";
    if (fail) s += ", " + std::to_string(fail) + " fail (" + failing + ")";
    if (inc) s += ", " + std::to_string(inc) + " inconclusive";
    return s;
}

void run(int idx, const std::string& name, const VerificationReport& rep) {
    bool ok = true;
    for (const auto& c : rep.checks)
        if (c.status == CheckRecord::fail) ok = false;
    line(idx, name, ok, summarize(rep));
}

} // namespace

int main() {
    const unsigned long long seed = 20240801;
    auto t0 = std::chrono::steady_clock::now();

    run(1, "CYBE residual exactly zero on all 14 catalog entries", suite_cybe());
    run(2, "unitarity residual exactly zero on the catalog", suite_unitarity());
    run(3, "half-loop subalgebra oracle agrees with the residual", suite_oracle(seed));
    run(4, "diagram triple enumeration matches brute force, ranks 1..5",
        suite_bd_enumeration());
    run(5, "Cartan solvers reproduce the printed tensors", suite_cartan_solvers());
    run(6, "closed-form Cartan identity checks, N = 2..6", suite_cg_identities());
    run(7, "quantum presentation relations and root-vector checks, N <= 4",
        suite_quantum_presentation());
    run(8, "QYBE residual exactly zero for the R-matrix family", suite_qybe());
    run(9, "cocycle residual exactly zero for the twists, tampered variants fail",
        suite_cocycle());
    run(10, "order-h residuals are scalar multiples of the identity", suite_semiclassical());
    run(11, "transfer matrices commute and Hamiltonians match their closed forms",
        suite_spin_chains(seed));
    run(12, "block-subalgebra realization and twisted coproducts, N = 2,3", suite_seaweed());
    run(13, "scaling identity exact on the catalog; numeric probe at 1e-8", suite_pde(seed));
    {
        auto a = suite_bd_enumeration();
        auto b = suite_bd_enumeration();
        a.seed = b.seed = seed;
        auto strip = [](VerificationReport r) {
            for (auto& c : r.checks) c.wall_ms = 0;
            return r.to_json().dump();
        };
        line(14, "identical seeds produce byte-identical reports", strip(a) == strip(b));
    }

    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    std::cout << "acceptance finished in " << secs << " s with " << failures
              << " failing criteria" << std::endl;
    if (failures > 0)
        std::cout << "expected reds: criterion 1 (one published rational sl(3) entry), "
                     "criteria 8 and 10 (published sl(3) twist products); see the project "
                     "notes for the analysis"
                  << std::endl;
    return failures == 0 ? 0 : 1;
}
