#include "ybe/solutions.hpp"

#include <stdexcept>

namespace ybe {

namespace {

const char* kIds[] = {"sl2.X0", "sl2.X1", "sl2.rat.R1", "sl2.rat.R2", "sl2.Xab",
                      "sl3.X0", "sl3.X1", "sl3.X2",     "sl3.X3",     "sl3.Y2",
                      "sl3.Y3", "slN.DJ", "rat.sl3.long", "rat.sl3.short"};

LieElement unit(Algebra a, const VarSetPtr& vs, int i, int j) {
    return LieElement::unit(a, vs, i, j);
}

// h_alpha^perp and h_beta^perp of the sl(3) rational family
LieElement h_alpha_perp(Algebra a, const VarSetPtr& vs) {
    return unit(a, vs, 1, 1) * Rational(1, 3) + unit(a, vs, 2, 2) * Rational(1, 3) +
           unit(a, vs, 3, 3) * Rational(-2, 3);
}

LieElement h_beta_perp(Algebra a, const VarSetPtr& vs) {
    return unit(a, vs, 1, 1) * Rational(2, 3) + unit(a, vs, 2, 2) * Rational(-1, 3) +
           unit(a, vs, 3, 3) * Rational(-1, 3);
}

// dilation family: X_xi(u,v) = xi X(xi u, xi v); a degree-k polynomial term
// picks up xi^(k+1) while the pole part is unchanged
Tensor2 dilation_scaled(const Tensor2& p, const RatFunc& xi) {
    Tensor2 r(p.algebra(), p.vars());
    const VarSetPtr& vs = p.vars();
    std::size_t ui = vs->index("u"), vi = vs->index("v");
    for (const auto& [k, c] : p.entries()) {
        // split the coefficient polynomial by total (u,v)-degree
        if (!c.is_polynomial()) throw std::logic_error("poly part must be polynomial");
        for (const auto& [m, coef] : c.num().terms()) {
            int deg = m[ui] + m[vi];
            RatFunc scaled = RatFunc(Poly::monomial(vs, m, coef)) * xi.pow(deg + 1);
            r.add(k, scaled);
        }
    }
    return r;
}

} // namespace

VarSetPtr solution_vars() {
    static VarSetPtr vs = VarSet::make({"u", "v", "a", "b", "xi", "hbar"});
    return vs;
}

Tensor2 standard_r0(Algebra a, const VarSetPtr& vars) {
    Tensor2 r(a, vars);
    RatFunc one = RatFunc::one(vars);
    for (int i = 1; i <= a.N; ++i)
        for (int j = i + 1; j <= a.N; ++j) r.add(i, j, j, i, one);
    return r + cartan_part(casimir(a, vars)) * Rational(1, 2);
}

Tensor2 Solution::full_tensor() const {
    RatFunc u = RatFunc::variable(vars, "u"), v = RatFunc::variable(vars, "v");
    Tensor2 x = poly_part;
    RatFunc pole = RatFunc::one(vars) / (u - v);
    for (const auto& [k, c] : pole_numerator.entries()) x.add(k, c * pole);
    return x;
}

std::vector<std::string> catalog_ids() {
    return std::vector<std::string>(std::begin(kIds), std::end(kIds));
}

Solution catalog_get_symbolic(const std::string& id) {
    auto vs = solution_vars();
    std::map<std::string, RatFunc> p;
    if (id == "sl2.Xab") {
        p["a"] = RatFunc::variable(vs, "a");
        p["b"] = RatFunc::variable(vs, "b");
    } else if (id == "rat.sl3.long" || id == "rat.sl3.short") {
        p["xi"] = RatFunc::variable(vs, "xi");
    } else if (id == "slN.DJ") {
        p["N"] = RatFunc::constant(vs, 4);
    }
    return catalog_get(id, p);
}

Solution catalog_get(const std::string& id, const std::map<std::string, RatFunc>& params) {
    auto vs = solution_vars();
    RatFunc u = RatFunc::variable(vs, "u"), v = RatFunc::variable(vs, "v");
    RatFunc one = RatFunc::one(vs);

    auto require = [&](const char* name) -> RatFunc {
        auto it = params.find(name);
        if (it == params.end())
            throw std::invalid_argument(id + " requires parameter " + name);
        return it->second;
    };

    Solution s;
    s.id = id;
    s.params = params;
    s.vars = vs;

    auto quasi_trig = [&](Algebra a, const Tensor2& poly) {
        s.alg = a;
        s.kind = Solution::quasi_trigonometric;
        s.pole_numerator = casimir(a, vs) * v;
        s.poly_part = poly;
    };
    auto rational = [&](Algebra a, const Tensor2& poly) {
        s.alg = a;
        s.kind = Solution::rational;
        s.pole_numerator = casimir(a, vs);
        s.poly_part = poly;
    };

    Algebra sl2{2, Algebra::sl};
    Algebra sl3{3, Algebra::sl};

    if (id == "sl2.X0") {
        quasi_trig(sl2, standard_r0(sl2, vs));
    } else if (id == "sl2.X1") {
        LieElement e = unit(sl2, vs, 1, 2);
        quasi_trig(sl2, standard_r0(sl2, vs) + tensor(e, e) * (u - v));
    } else if (id == "sl2.rat.R1") {
        LieElement f = unit(sl2, vs, 2, 1);
        LieElement h = unit(sl2, vs, 1, 1) - unit(sl2, vs, 2, 2);
        rational(sl2, wedge(h, f));
    } else if (id == "sl2.rat.R2") {
        LieElement f = unit(sl2, vs, 2, 1);
        LieElement h = unit(sl2, vs, 1, 1) - unit(sl2, vs, 2, 2);
        rational(sl2, tensor(f, h) * u - tensor(h, f) * v);
    } else if (id == "sl2.Xab") {
        RatFunc a = require("a"), b = require("b");
        LieElement e = unit(sl2, vs, 1, 2), f = unit(sl2, vs, 2, 1);
        LieElement h = unit(sl2, vs, 1, 1) - unit(sl2, vs, 2, 2);
        Tensor2 poly = tensor(f, e) + tensor(h, h) * Rational(1, 4) +
                       (tensor(f, h) * u - tensor(h, f) * v) * a +
                       (tensor(f, h) - tensor(h, f)) * b;
        quasi_trig(sl2, poly);
    } else if (id == "sl3.X0") {
        quasi_trig(sl3, standard_r0(sl3, vs));
    } else if (id == "sl3.X1") {
        // constant solution attached to the one-root Cartan datum: standard
        // positive-root sum plus the printed Cartan tensor
        LieElement A = unit(sl3, vs, 1, 1) - unit(sl3, vs, 3, 3);
        LieElement B = unit(sl3, vs, 2, 2) - unit(sl3, vs, 3, 3);
        Tensor2 rt = tensor(A, A) * Rational(1, 3) + tensor(B, B) * Rational(1, 3) -
                     tensor(A, B) * Rational(1, 3);
        Tensor2 r1(sl3, vs);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) r1.add(i, j, j, i, one);
        quasi_trig(sl3, r1 + rt);
    } else if (id == "sl3.X2" || id == "sl3.Y2") {
        // solutions of the one-root class with non-constant polynomial part;
        // the Cartan tensor is the classification datum of the class and the
        // current terms pair the highest root vector with the neighbouring
        // simple one
        auto E = [&](int i, int j) { return unit(sl3, vs, i, j); };
        Tensor2 base(sl3, vs);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) base.add(i, j, j, i, one);
        LieElement A = E(1, 1) - E(3, 3), B = E(2, 2) - E(3, 3);
        Tensor2 extra(sl3, vs), cart(sl3, vs);
        if (id == "sl3.X2") {
            cart = tensor(A, A) * Rational(1, 3) + tensor(B, B) * Rational(1, 3) +
                   tensor(B, A) * Rational(-1, 3);
            extra = tensor(E(1, 3), E(2, 3)) * (-u) + tensor(E(2, 3), E(1, 3)) * v;
        } else {
            LieElement C = A - B;   // diagram-involution image of B
            cart = tensor(A, A) * Rational(1, 3) + tensor(C, C) * Rational(1, 3) +
                   tensor(C, A) * Rational(-1, 3);
            extra = tensor(E(1, 3), E(1, 2)) * (-u) + tensor(E(1, 2), E(1, 3)) * v;
        }
        quasi_trig(sl3, base + cart + extra);
    } else if (id == "sl3.X3") {
        auto E = [&](int i, int j) { return unit(sl3, vs, i, j); };
        Tensor2 uterms = (tensor(E(1, 2), E(3, 2)) + tensor(E(1, 3), E(1, 2)) +
                          tensor(E(1, 2), E(1, 3))) * (-u);
        Tensor2 vterms = (tensor(E(3, 2), E(1, 2)) + tensor(E(1, 2), E(1, 3)) +
                          tensor(E(1, 3), E(1, 2))) * v;
        Tensor2 consts = wedge(E(1, 3) + E(3, 2), E(2, 3)) +
                         wedge(E(1, 1) - E(3, 3), E(1, 1) - E(2, 2)) * Rational(1, 6);
        quasi_trig(sl3, standard_r0(sl3, vs) + uterms + vterms + consts);
    } else if (id == "sl3.Y3") {
        auto E = [&](int i, int j) { return unit(sl3, vs, i, j); };
        Tensor2 uterms = (tensor(E(1, 3), E(2, 3)) + tensor(E(2, 3), E(1, 3)) +
                          tensor(E(2, 3), E(2, 1))) * (-u);
        Tensor2 vterms = (tensor(E(1, 3), E(2, 3)) + tensor(E(2, 3), E(1, 3)) +
                          tensor(E(2, 1), E(2, 3))) * v;
        Tensor2 consts = wedge(E(1, 3) + E(2, 1), E(1, 2)) +
                         wedge(E(1, 1) - E(2, 2), E(2, 2) - E(3, 3)) * Rational(1, 6);
        quasi_trig(sl3, standard_r0(sl3, vs) + uterms + vterms + consts);
    } else if (id == "slN.DJ") {
        int N = 4;
        auto it = params.find("N");
        if (it != params.end()) {
            Rational r = it->second.constant_value();
            N = static_cast<int>(numerator(r));
        }
        if (N < 2 || N > 8) throw std::invalid_argument("slN.DJ: N out of range");
        Algebra a{N, Algebra::sl};
        quasi_trig(a, standard_r0(a, vs));
    } else if (id == "rat.sl3.long") {
        RatFunc xi = require("xi");
        auto E = [&](int i, int j) { return unit(sl3, vs, i, j); };
        LieElement ha = h_alpha_perp(sl3, vs), hb = h_beta_perp(sl3, vs);
        Tensor2 p = tensor(ha, E(3, 2)) * v - tensor(E(3, 2), ha) * u + wedge(hb, E(2, 1)) +
                    tensor(E(2, 1), E(3, 1)) * v - tensor(E(3, 1), E(2, 1)) * u +
                    wedge(E(1, 2), E(3, 2));
        rational(sl3, dilation_scaled(p, xi));
    } else if (id == "rat.sl3.short") {
        RatFunc xi = require("xi");
        auto E = [&](int i, int j) { return unit(sl3, vs, i, j); };
        LieElement ha = h_alpha_perp(sl3, vs);
        LieElement h12 = E(1, 1) - E(2, 2), h23 = E(2, 2) - E(3, 3);
        Tensor2 p = tensor(E(3, 1), ha) * (-u) + tensor(ha, E(3, 1)) * v +
                    wedge(ha, E(3, 2)) + wedge(h12 - h23, E(2, 1)) * Rational(1, 3);
        rational(sl3, dilation_scaled(p, xi));
    } else {
        throw std::invalid_argument("unknown catalog id: " + id);
    }
    return s;
}

} // namespace ybe
