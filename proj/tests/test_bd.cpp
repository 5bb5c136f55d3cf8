#include "doctest.h"

#include "ybe/bd.hpp"
#include "ybe/delorme.hpp"

using namespace ybe;

TEST_CASE("admissibility") {
    CHECK(bd_admissible(BDTriple{1, {}, {}, {}}));
    // identity map on a single root cycles forever
    CHECK_FALSE(bd_admissible(BDTriple{1, {1}, {1}, {{1, 1}}}));
    CHECK(bd_admissible(BDTriple{2, {1}, {2}, {{1, 2}}}));
    // the full swap on rank 2 cycles
    CHECK_FALSE(bd_admissible(BDTriple{2, {1, 2}, {1, 2}, {{1, 2}, {2, 1}}}));
    // non-isometry on rank 3: adjacent pair mapped to a distant one
    CHECK_FALSE(bd_admissible(BDTriple{3, {1, 2}, {1, 3}, {{1, 1}, {2, 3}}}));
}

TEST_CASE("enumeration counts and brute-force agreement") {
    CHECK(enumerate_bd(1).size() == 1);
    CHECK(enumerate_bd(2).size() == 3);
    for (int rank = 1; rank <= 5; ++rank) {
        auto fast = enumerate_bd(rank);
        auto brute = enumerate_bd_bruteforce(rank);
        REQUIRE(fast.size() == brute.size());
        for (const auto& t : fast) {
            bool found = false;
            for (const auto& b : brute)
                if (t == b) found = true;
            CHECK(found);
        }
        for (const auto& t : fast) CHECK(bd_admissible(t));
        // duplicate-free
        for (std::size_t i = 0; i < fast.size(); ++i)
            for (std::size_t j = i + 1; j < fast.size(); ++j) CHECK_FALSE(fast[i] == fast[j]);
    }
    CHECK_THROWS_AS(enumerate_bd(9), std::invalid_argument);
}

TEST_CASE("subdiagram involution") {
    auto t3 = theta_s(2, 1);
    CHECK(t3[2] == 2);
    auto t4 = theta_s(3, 1);
    CHECK(t4[2] == 3);
    CHECK(t4[3] == 2);
    auto t5 = theta_s(4, 1);
    CHECK(t5[2] == 4);
    CHECK(t5[3] == 3);
    CHECK(t5[4] == 2);
    // deleting an interior root flips both components
    auto tm = theta_s(4, 2);
    CHECK(tm[1] == 1);
    CHECK(tm[3] == 4);
    CHECK(tm[4] == 3);
}

TEST_CASE("classification against a deleted root") {
    auto sI = s_admissible_classify(BDTriple{2, {1}, {2}, {{1, 2}}}, 1);
    REQUIRE(sI);
    CHECK(sI->kind == SAdmissible::I);

    auto sIV = s_admissible_classify(BDTriple{2, {1, 2}, {1, 2}, {{1, 2}, {2, 1}}}, 1);
    REQUIRE(sIV);
    CHECK(sIV->kind == SAdmissible::II);
    CHECK(sIV->beta == 2);

    auto s2 = s_admissible_classify(BDTriple{1, {1}, {1}, {{1, 1}}}, 1);
    REQUIRE(s2);
    CHECK(s2->kind == SAdmissible::II);

    // rejection with reason
    std::string why;
    auto bad = s_admissible_classify(BDTriple{2, {1, 2}, {1, 2}, {{1, 1}, {2, 2}}}, 1, &why);
    CHECK_FALSE(bad);
    CHECK_FALSE(why.empty());
}

TEST_CASE("Cartan solver for the standard diagram data") {
    auto vs = VarSet::make({"t"});
    for (int N = 2; N <= 5; ++N) {
        BDTriple cg;
        cg.rank = N - 1;
        for (int i = 1; i <= N - 2; ++i) {
            cg.gamma1.push_back(i);
            cg.gamma2.push_back(i + 1);
            cg.tau.emplace_back(i, i + 1);
        }
        auto sol = solve_cartan_bd(cg, {N, Algebra::gl});
        CHECK(sol.contains(cg_cartan_closed_form(N), vs));
        // kernel vectors satisfy the homogeneous system: spot check by adding
        // one to the particular and re-testing membership
        if (!sol.kernel.empty()) {
            CartanCoeffs moved = sol.particular;
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) moved[a][b] += sol.kernel[0][a][b];
            CHECK(sol.contains(moved, vs));
        }
    }
    BDTriple empty{1, {}, {}, {}};
    auto sol2 = solve_cartan_bd(empty, {2, Algebra::sl});
    CartanCoeffs quarter = {{Rational(1, 4), Rational(-1, 4)}, {Rational(-1, 4), Rational(1, 4)}};
    CHECK(sol2.contains(quarter, vs));
    CHECK(sol2.kernel.empty());
}

TEST_CASE("closed-form identity report") {
    for (int N = 2; N <= 6; ++N) {
        auto rep = verify_cg_identities(N);
        CHECK(rep.weights_ok);
        CHECK(rep.pair_diffs_ok);
        CHECK(rep.bd_conditions_ok);
        CHECK(rep.all_ok());
    }
}

TEST_CASE("constrained Cartan solver for the deleted-root cases") {
    auto vs = VarSet::make({"t"});
    Algebra sl3{3, Algebra::sl};
    auto mkAB = [&](Rational cAA, Rational cAB, Rational cBA, Rational cBB) {
        CartanCoeffs c(3, std::vector<Rational>(3, 0));
        Rational A[3] = {1, 0, -1}, B[3] = {0, 1, -1};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                c[a][b] = cAA * A[a] * A[b] + cAB * A[a] * B[b] + cBA * B[a] * A[b] +
                          cBB * B[a] * B[b];
        return c;
    };
    // empty case: one-parameter family through the printed symmetric member
    auto sI = s_admissible_classify(BDTriple{2, {}, {}, {}}, 1);
    auto solI = solve_cartan_quasitrig(*sI, sl3);
    CHECK(solI.kernel.size() == 1);
    CHECK(solI.contains(mkAB(Rational(1, 3), Rational(-1, 6), Rational(-1, 6), Rational(1, 3)),
                        vs));
    CHECK(solI.contains(mkAB(Rational(1, 3), Rational(-1, 3), Rational(0), Rational(1, 3)), vs));

    // fixed-root case: unique, printed tensor
    auto sII = s_admissible_classify(BDTriple{2, {1}, {1}, {{1, 1}}}, 1);
    auto solII = solve_cartan_quasitrig(*sII, sl3);
    CHECK(solII.kernel.empty());
    CHECK(solII.contains(mkAB(Rational(1, 3), Rational(-1, 3), Rational(0), Rational(1, 3)), vs));

    // shifted-root case
    auto sIII = s_admissible_classify(BDTriple{2, {1}, {2}, {{1, 2}}}, 1);
    auto solIII = solve_cartan_quasitrig(*sIII, sl3);
    CHECK(solIII.contains(mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3)), vs));

    // swap case
    auto sIV = s_admissible_classify(BDTriple{2, {1, 2}, {1, 2}, {{1, 2}, {2, 1}}}, 1);
    auto solIV = solve_cartan_quasitrig(*sIV, sl3);
    CHECK(solIV.contains(mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3)), vs));

    // sl(2) case: quarter tensor
    auto s2 = s_admissible_classify(BDTriple{1, {1}, {1}, {{1, 1}}}, 1);
    auto sol2 = solve_cartan_quasitrig(*s2, {2, Algebra::sl});
    CartanCoeffs quarter = {{Rational(1, 4), Rational(-1, 4)}, {Rational(-1, 4), Rational(1, 4)}};
    CHECK(sol2.contains(quarter, vs));
}

TEST_CASE("Cartan reconstruction of the Lagrangian data") {
    Algebra sl3{3, Algebra::sl};
    auto mkAB = [&](Rational cAA, Rational cAB, Rational cBA, Rational cBB) {
        CartanCoeffs c(3, std::vector<Rational>(3, 0));
        Rational A[3] = {1, 0, -1}, B[3] = {0, 1, -1};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                c[a][b] = cAA * A[a] * A[b] + cAB * A[a] * B[b] + cBA * B[a] * A[b] +
                          cBB * B[a] * B[b];
        return c;
    };
    auto rIII = mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3));
    auto sIII = s_admissible_classify(BDTriple{2, {1}, {2}, {{1, 2}}}, 1);
    auto lag = reconstruct_ia_prime(*sIII, rIII, sl3);
    CHECK(lag.pairing_identity);
    CHECK(lag.normalization);
    CHECK(lag.transversal);
    CHECK(lag.lagrangian);

    auto s2 = s_admissible_classify(BDTriple{1, {}, {}, {}}, 1);
    CartanCoeffs quarter = {{Rational(1, 4), Rational(-1, 4)}, {Rational(-1, 4), Rational(1, 4)}};
    auto lag2 = reconstruct_ia_prime(*s2, quarter, {2, Algebra::sl});
    CHECK(lag2.ok());

    // tampered tensor breaks the normalization identity
    auto bad = mkAB(Rational(1, 3), Rational(1, 6), Rational(-1, 2), Rational(1, 3));
    auto lag3 = reconstruct_ia_prime(*sIII, bad, sl3);
    CHECK_FALSE(lag3.normalization);
}
