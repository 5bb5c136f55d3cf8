#include "doctest.h"

#include "ybe/cybe.hpp"
#include "ybe/io.hpp"
#include "ybe/suites.hpp"

#include <random>

using namespace ybe;

TEST_CASE("rational function JSON round trip is bit exact") {
    auto vs = VarSet::make({"u", "v"});
    RatFunc u = RatFunc::variable(vs, "u"), v = RatFunc::variable(vs, "v");
    RatFunc f = (u * Rational(3, 7) - v) / ((u - v) * (u + v));
    Json j = ratfunc_to_json(f);
    RatFunc g = ratfunc_from_json(j);
    CHECK(f == g);
    CHECK(ratfunc_to_json(g) == j);
    CHECK(j.dump() == ratfunc_to_json(g).dump());
}

TEST_CASE("fuzzed round trips") {
    auto vs = VarSet::make({"x", "y", "q"});
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(0, 3);
    for (int t = 0; t < 25; ++t) {
        Poly num(vs), den(vs);
        for (int k = 0; k < 4; ++k) {
            Mono m{deg(rng), deg(rng), deg(rng)};
            num.add_term(m, coeff(rng));
            Mono m2{deg(rng), deg(rng), deg(rng)};
            den.add_term(m2, coeff(rng));
        }
        if (den.is_zero()) den = Poly::constant(vs, 1);
        RatFunc f(num, den);
        Json j = ratfunc_to_json(f);
        CHECK(ratfunc_from_json(j) == f);
        CHECK(ratfunc_to_json(ratfunc_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("solution export and import keep residuals") {
    for (const char* id : {"sl2.X1", "sl3.X2", "sl2.Xab"}) {
        Solution s = catalog_get_symbolic(id);
        Json j = solution_to_json(s);
        Solution t = solution_from_json(j);
        CHECK(t.id == s.id);
        CHECK((t.kind == s.kind));
        CHECK(t.poly_part == s.poly_part);
        CHECK(t.pole_numerator == s.pole_numerator);
        CHECK(cybe_residual(t).is_zero());
        // serialized form is stable
        CHECK(solution_to_json(t).dump() == j.dump());
    }
}

TEST_CASE("triple schema round trip") {
    BDTriple t{3, {1, 2}, {2, 3}, {{1, 2}, {2, 3}}};
    Json j = bd_triple_to_json(t);
    CHECK(j["rank"] == 3);
    BDTriple u = bd_triple_from_json(j);
    CHECK(t == u);
}

TEST_CASE("matrix schema with leg metadata") {
    auto vs = VarSet::make({"q", "z1", "z2"});
    MatRF m(2, 2, vs);
    m.at(0, 1) = RatFunc::variable(vs, "z1") / RatFunc::variable(vs, "q");
    Json j = matrix_to_json(m, {{2, "z1"}, {2, "z2"}});
    MatRF b = matrix_from_json(j);
    CHECK(b == m);
    CHECK(j["legs"][0]["var"] == "z1");
}

TEST_CASE("reports serialize deterministically") {
    VerificationReport rep;
    rep.suite = "demo";
    rep.seed = 7;
    add_check(rep, "first", true, "ok", 12);
    add_check(rep, "second", false, "residual nonzero", 5);
    auto j = rep.to_json();
    CHECK(j["checks"].size() == 2);
    CHECK(j["ok"] == false);
    CHECK(rep.exit_code() == 1);
    // wall-time stripped forms compare byte for byte
    auto strip = [](nlohmann::ordered_json j2) {
        for (auto& c : j2["checks"]) c["wall_ms"] = 0;
        return j2.dump();
    };
    VerificationReport rep2 = rep;
    rep2.checks[0].wall_ms = 999;
    CHECK(strip(rep.to_json()) == strip(rep2.to_json()));
}

TEST_CASE("suites expose the expected names and pass") {
    auto enumrep = suite_bd_enumeration();
    CHECK(enumrep.all_pass());
    auto cgrep = suite_cg_identities();
    CHECK(cgrep.all_pass());
}
