#include "doctest.h"

#include "ybe/cybe.hpp"
#include "ybe/oracle.hpp"

using namespace ybe;

namespace {

Solution perturbed(const char* base, const Tensor2& extra) {
    Solution s = catalog_get_symbolic(base);
    s.poly_part = s.poly_part + extra;
    return s;
}

} // namespace

TEST_CASE("loop element arithmetic") {
    Algebra sl2{2, Algebra::sl};
    auto vs = solution_vars();
    RatFunc one = RatFunc::one(vs);
    LoopElt x(sl2, vs), y(sl2, vs);
    x.add_loop(1, 2, -1, one);
    y.add_loop(2, 1, 1, one);
    LoopElt br = loop_bracket(x, y);
    // [e12 u^-1, e21 u] = (e11 - e22) u^0
    RatFunc q = loop_form(br, br);
    CHECK(loop_form(x, y) == one);      // pairing picks the free term
    CHECK(!br.is_zero());
}

TEST_CASE("oracle passes the catalog entries and agrees with the residual") {
    for (const char* id : {"sl2.X0", "sl2.X1", "sl2.Xab", "sl3.X0", "sl3.X1", "sl3.X2",
                           "sl3.X3", "sl3.Y2", "sl3.Y3"}) {
        Solution s = catalog_get_symbolic(id);
        auto rep = subalgebra_oracle(s, 3);
        CHECK_MESSAGE(rep.pass, id, " ", rep.witness);
    }
}

TEST_CASE("oracle on the base entry with trivial map") {
    // X0 maps to the half-loop algebra itself
    auto rep = subalgebra_oracle(catalog_get_symbolic("sl2.X0"), 2);
    CHECK(rep.pass);
}

TEST_CASE("tampered entries fail with witnesses") {
    Solution s = catalog_get_symbolic("sl2.X0");
    auto vs = s.vars;
    RatFunc u = RatFunc::variable(vs, "u");
    LieElement e = LieElement::unit(s.alg, vs, 1, 2);
    auto bad = perturbed("sl2.X0", tensor(e, e) * u);
    auto rep = subalgebra_oracle(bad, 3);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.empty());
    CHECK_FALSE(cybe_residual(bad).is_zero());
}

TEST_CASE("oracle is only defined for quasi-trigonometric sl entries") {
    CHECK_THROWS_AS(subalgebra_oracle(catalog_get_symbolic("sl2.rat.R1"), 3),
                    std::invalid_argument);
}

TEST_CASE("cutoff precondition") {
    CHECK_THROWS_AS(subalgebra_oracle(catalog_get_symbolic("sl2.X1"), 1), std::invalid_argument);
}

TEST_CASE("agreement in both directions on structured perturbations") {
    Solution base = catalog_get_symbolic("sl2.X0");
    auto vs = base.vars;
    RatFunc u = RatFunc::variable(vs, "u"), v = RatFunc::variable(vs, "v");
    LieElement e = LieElement::unit(base.alg, vs, 1, 2);
    LieElement f = LieElement::unit(base.alg, vs, 2, 1);
    LieElement h = LieElement::unit(base.alg, vs, 1, 1) - LieElement::unit(base.alg, vs, 2, 2);

    struct Case {
        Tensor2 extra;
        const char* name;
    };
    std::vector<Case> cases;
    cases.push_back({tensor(e, e) * (u - v), "valid current-term"});
    cases.push_back({(tensor(e, h) * u - tensor(h, e) * v) * Rational(2), "invalid current-term"});
    cases.push_back({wedge(e, h), "invalid constant wedge"});
    cases.push_back({wedge(f, h) * Rational(3), "lowering wedge"});
    cases.push_back({Tensor2(base.alg, vs), "untouched"});

    for (const auto& c : cases) {
        Solution s = perturbed("sl2.X0", c.extra);
        bool cy = cybe_residual(s).is_zero() && unitarity_residual(s).is_zero();
        auto rep = subalgebra_oracle(s, 3);
        CHECK_MESSAGE(rep.pass == cy, c.name);
    }
}
