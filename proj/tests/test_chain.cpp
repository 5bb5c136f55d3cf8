#include "doctest.h"

#include "ybe/chain.hpp"

using namespace ybe;

TEST_CASE("transfer matrix for one site is the aux trace") {
    ChainSpec spec;
    spec.family = ChainSpec::E32;
    spec.sites = 1;
    MatRF t = transfer_matrix(spec, "z");
    CHECK(t.rows() == 2);
    // trace of the full R-matrix over the auxiliary leg: diagonal sums
    auto vs = chain_vars();
    MatRF r = chain_r(spec, "z", "z2");
    MatRF expect(2, 2, vs);
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                expect.at(i, j) = expect.at(i, j) + r.at(a * 2 + i, a * 2 + j);
    CHECK(t == expect);
}

TEST_CASE("regular point collapses to a shift") {
    // at z = z2 the R-matrix is the permutation, so the 1-site transfer matrix
    // is the identity matrix trace-normalized
    ChainSpec spec;
    spec.family = ChainSpec::E32;
    spec.sites = 1;
    auto vs = chain_vars();
    MatRF t = transfer_matrix(spec, "z").subst({{"z", RatFunc::variable(vs, "z2")}}, vs);
    CHECK(t == MatRF::identity(2, vs));
    // two sites: the cyclic shift
    spec.sites = 2;
    MatRF t2 = transfer_matrix(spec, "z").subst({{"z", RatFunc::variable(vs, "z2")}}, vs);
    MatRF shift(4, 4, vs);
    RatFunc one = RatFunc::one(vs);
    shift.at(0, 0) = one;
    shift.at(1, 2) = one;
    shift.at(2, 1) = one;
    shift.at(3, 3) = one;
    CHECK(t2 == shift);
}

TEST_CASE("commuting family, symbolic") {
    ChainSpec e32;
    e32.family = ChainSpec::E32;
    e32.sites = 2;
    CHECK(commute_check_symbolic(e32).zero);
    e32.sites = 3;
    CHECK(commute_check_symbolic(e32).zero);
    ChainSpec e34;
    e34.family = ChainSpec::E34;
    e34.sites = 2;
    CHECK(commute_check_symbolic(e34).zero);
    ChainSpec e41;
    e41.family = ChainSpec::E41;
    e41.sites = 2;
    CHECK(commute_check_symbolic(e41).zero);
    e32.sites = 4;
    CHECK_THROWS_AS(commute_check_symbolic(e32), std::invalid_argument);
}

TEST_CASE("commuting family, sampled points") {
    ChainSpec spec;
    spec.family = ChainSpec::E34;
    spec.sites = 4;
    auto rep = commute_check_sampled(spec, 5, 20240801);
    CHECK(rep.zero);
    CHECK(rep.samples_checked == 5);
}

TEST_CASE("a tampered R-matrix breaks commutativity") {
    // dropping the lowering (x) lowering coupling off the two-parameter family
    auto vs = chain_vars();
    auto E2 = [&](int i, int j) {
        MatRF m(2, 2, vs);
        m.at(i - 1, j - 1) = RatFunc::one(vs);
        return m;
    };
    ChainSpec good;
    good.family = ChainSpec::E34;
    good.sites = 2;
    good.params["a"] = RatFunc::constant(vs, 2);
    good.params["b"] = RatFunc::constant(vs, 3);
    good.params["q"] = RatFunc::constant(vs, 5);
    good.params["z2"] = RatFunc::constant(vs, 7);
    MatRF tp = transfer_matrix(good, "zp");
    // rebuild with the sm (x) sm term removed
    auto tampered_r = [&](const std::string& ua) {
        MatRF r = chain_r(good, ua, "z2").subst({{"z2", good.params["z2"]}}, vs);
        // remove the Cartan-lowering coupling
        r.at(1, 0) = RatFunc::zero(vs);
        return r;
    };
    MatRF prod = MatRF::identity(8, vs);
    for (int site = 2; site >= 1; --site)
        prod = prod * place_on_legs(tampered_r("zs"), 3, 0, site, 2);
    MatRF ts = partial_trace_first(prod, 2, 4);
    CHECK_FALSE((tp * ts - ts * tp).is_zero());
}

TEST_CASE("hamiltonians match the closed form up to a scalar shift") {
    auto vs = chain_vars();
    unsigned long long state = 99;
    for (int trial = 0; trial < 3; ++trial) {
        ChainSpec spec;
        spec.family = ChainSpec::E34;
        spec.sites = 3;
        spec.params["q"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["z2"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["a"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["b"] = RatFunc::constant(vs, sample_prime(state));
        auto gap = hamiltonian_scalar_gap(spec);
        CHECK(gap.scalar);
    }
    ChainSpec e32;
    e32.family = ChainSpec::E32;
    e32.sites = 3;
    e32.params["q"] = RatFunc::constant(vs, 11);
    e32.params["z2"] = RatFunc::constant(vs, 13);
    CHECK(hamiltonian_scalar_gap(e32).scalar);
}

TEST_CASE("per-site additive shift is stable in the site count") {
    auto vs = chain_vars();
    ChainSpec s3, s4;
    s3.family = s4.family = ChainSpec::E32;
    s3.sites = 3;
    s4.sites = 4;
    for (auto* s : {&s3, &s4}) {
        s->params["q"] = RatFunc::constant(vs, 7);
        s->params["z2"] = RatFunc::constant(vs, 11);
    }
    auto g3 = hamiltonian_scalar_gap(s3);
    auto g4 = hamiltonian_scalar_gap(s4);
    REQUIRE(g3.scalar);
    REQUIRE(g4.scalar);
    CHECK(g3.value * Rational(4) == g4.value * Rational(3));
}

TEST_CASE("rational family closed form and its constants") {
    auto vs = chain_vars();
    ChainSpec spec;
    spec.family = ChainSpec::E41;
    spec.sites = 3;
    auto [C, D] = hamiltonian_constants(spec);
    RatFunc eta = RatFunc::variable(vs, "eta"), xi = RatFunc::variable(vs, "xi"),
            z2 = RatFunc::variable(vs, "z2");
    CHECK(C == -(xi * eta) * Rational(1, 2));
    CHECK(D == xi * xi * z2 * (z2 - eta));
    CHECK(hamiltonian_scalar_gap(spec).scalar);

    // two-parameter family constants
    ChainSpec tspec;
    tspec.family = ChainSpec::E34;
    tspec.sites = 2;
    auto [C2, D2] = hamiltonian_constants(tspec);
    RatFunc q = RatFunc::variable(vs, "q"), a = RatFunc::variable(vs, "a"),
            b = RatFunc::variable(vs, "b");
    CHECK(C2 == (q - RatFunc::one(vs)) * Rational(1, 2) * (a * z2 * q.inverse() - b));
    CHECK(D2 == (a * z2 + b) * (q.inverse() * a * z2 + q * b));
    // a = b = 0 reduces to the undeformed chain density
    ChainSpec plain;
    plain.family = ChainSpec::E34;
    plain.sites = 2;
    plain.params["a"] = RatFunc::zero(vs);
    plain.params["b"] = RatFunc::zero(vs);
    auto [C0, D0] = hamiltonian_constants(plain);
    CHECK(C0.is_zero());
    CHECK(D0.is_zero());
}

TEST_CASE("closed-form hamiltonian commutes with the transfer matrix") {
    auto vs = chain_vars();
    ChainSpec spec;
    spec.family = ChainSpec::E34;
    spec.sites = 3;
    spec.params["q"] = RatFunc::constant(vs, 101);
    spec.params["z2"] = RatFunc::constant(vs, 103);
    spec.params["a"] = RatFunc::constant(vs, 5);
    spec.params["b"] = RatFunc::constant(vs, 3);
    CHECK(integrability_smoke(spec, 3, 42));

    ChainSpec xxx;
    xxx.family = ChainSpec::E41;
    xxx.sites = 2;
    xxx.params["eta"] = RatFunc::constant(vs, 5);
    xxx.params["xi"] = RatFunc::constant(vs, 3);
    xxx.params["z2"] = RatFunc::constant(vs, 107);
    CHECK(integrability_smoke(xxx, 3, 43));

    // tampering the coupling constant breaks it
    ChainSpec bad = spec;
    MatRF hc = hamiltonian_closed_form(bad);
    MatRF t = transfer_matrix(bad, "z").subst({{"z", RatFunc::constant(vs, 109)}}, vs);
    auto E2 = [&](int i, int j) {
        MatRF m(2, 2, vs);
        m.at(i - 1, j - 1) = RatFunc::one(vs);
        return m;
    };
    MatRF sm = E2(2, 1), sz = E2(1, 1) - E2(2, 2);
    MatRF wrong(8, 8, vs);
    for (int k = 0; k < 3; ++k)
        wrong = wrong + place_on_legs((sz.kron(sm) + sm.kron(sz)), 3, k, (k + 1) % 3, 2);
    MatRF hbad = hc + wrong * RatFunc::constant(vs, 17);
    CHECK_FALSE((hbad * t - t * hbad).is_zero());
}
