#include "ybe/cybe.hpp"

#include <stdexcept>

namespace ybe {

VarSetPtr residual_vars() {
    static VarSetPtr vs = VarSet::make({"u1", "u2", "u3", "a", "b", "xi", "hbar"});
    return vs;
}

Tensor2 solution_on_legs(const Solution& X, int slot) {
    auto vs = residual_vars();
    const char* ua = nullptr;
    const char* ub = nullptr;
    switch (slot) {
        case 12: ua = "u1"; ub = "u2"; break;
        case 13: ua = "u1"; ub = "u3"; break;
        case 23: ua = "u2"; ub = "u3"; break;
        default: throw std::invalid_argument("slot must be 12, 13 or 23");
    }
    std::map<std::string, RatFunc> bind{{"u", RatFunc::variable(vs, ua)},
                                        {"v", RatFunc::variable(vs, ub)}};
    return X.full_tensor().subst(bind, vs);
}

Tensor3 cybe_residual(const Solution& X) {
    Tensor2 x12 = solution_on_legs(X, 12);
    Tensor2 x13 = solution_on_legs(X, 13);
    Tensor2 x23 = solution_on_legs(X, 23);
    return bracket_embedded(x12, 12, x13, 13) + bracket_embedded(x12, 12, x23, 23) +
           bracket_embedded(x13, 13, x23, 23);
}

Tensor2 unitarity_residual(const Solution& X) {
    Tensor2 x = X.full_tensor();
    RatFunc u = RatFunc::variable(X.vars, "u"), v = RatFunc::variable(X.vars, "v");
    Tensor2 swapped = x.subst({{"u", v}, {"v", u}}, X.vars).swapped_legs();
    return x + swapped;
}

bool quasi_constant_test(const Solution& X) {
    if (X.kind != Solution::quasi_trigonometric)
        throw std::invalid_argument("quasi-constant test applies to quasi-trigonometric solutions");
    std::size_t ui = X.vars->index("u"), vi = X.vars->index("v");
    for (const auto& [k, c] : X.poly_part.entries()) {
        if (!c.is_polynomial()) return false;
        for (const auto& [m, coef] : c.num().terms())
            if (m[ui] + m[vi] > 0) return false;
    }
    return true;
}

GaugeMap GaugeMap::identity() { return GaugeMap{}; }

GaugeMap GaugeMap::negative_transpose() {
    GaugeMap g;
    Atom a;
    a.neg_transpose = true;
    g.atoms.push_back(std::move(a));
    return g;
}

GaugeMap GaugeMap::conjugation(std::vector<std::vector<Poly>> mat,
                               std::vector<std::vector<Poly>> inv) {
    GaugeMap g;
    Atom a;
    a.mat = std::move(mat);
    a.inv = std::move(inv);
    g.atoms.push_back(std::move(a));
    return g;
}

GaugeMap GaugeMap::then(const GaugeMap& next) const {
    GaugeMap g = *this;
    g.atoms.insert(g.atoms.end(), next.atoms.begin(), next.atoms.end());
    return g;
}

namespace {

// apply one atom to a single tensor leg living on variable `legvar`
LieElement apply_atom_unit(const GaugeMap::Atom& at, Algebra alg, const VarSetPtr& vs,
                           int i, int j, const std::string& legvar) {
    if (at.neg_transpose) {
        LieElement r(alg, vs);
        r.add(j, i, RatFunc::constant(vs, -1));
        return r;
    }
    const int N = alg.N;
    // verify the witness once per call site: mat * inv == identity
    // (cheap relative to the transform itself)
    RatFunc uvar = RatFunc::variable(vs, legvar);
    std::map<std::string, RatFunc> to_leg{{"u", uvar}};
    auto entry = [&](const std::vector<std::vector<Poly>>& m, int r, int c) {
        return RatFunc(m[r][c]).subst(to_leg, vs);
    };
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            RatFunc s = RatFunc::zero(vs);
            for (int k = 0; k < N; ++k) s = s + entry(at.mat, r, k) * entry(at.inv, k, c);
            if ((r == c && s != RatFunc::one(vs)) || (r != c && !s.is_zero()))
                throw std::domain_error("gauge map inverse witness failed");
        }
    LieElement r(alg, vs);
    // sigma e_ij sigma^{-1} = sum_{k,l} sigma_{k i} (sigma^{-1})_{j l} e_kl
    for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
            RatFunc c = entry(at.mat, k - 1, i - 1) * entry(at.inv, j - 1, l - 1);
            if (!c.is_zero()) r.add(k, l, c);
        }
    return r;
}

Tensor2 apply_gauge(const GaugeMap& g, const Tensor2& t) {
    Tensor2 cur = t;
    for (const auto& at : g.atoms) {
        Tensor2 next(cur.algebra(), cur.vars());
        for (const auto& [k, c] : cur.entries()) {
            LieElement l1 = apply_atom_unit(at, cur.algebra(), cur.vars(), k[0], k[1], "u");
            LieElement l2 = apply_atom_unit(at, cur.algebra(), cur.vars(), k[2], k[3], "v");
            for (const auto& [ka, ca] : l1.coeffs())
                for (const auto& [kb, cb] : l2.coeffs())
                    next.add(ka.first, ka.second, kb.first, kb.second, c * ca * cb);
        }
        cur = next;
    }
    return cur;
}

} // namespace

Solution gauge_transform(const Solution& X, const GaugeMap& g) {
    Tensor2 total = apply_gauge(g, X.full_tensor());
    RatFunc u = RatFunc::variable(X.vars, "u"), v = RatFunc::variable(X.vars, "v");
    RatFunc pole = RatFunc::one(X.vars) / (u - v);

    Solution out = X;
    // the pole numerator (Omega or v*Omega) is gauge invariant; re-split and
    // demand the remainder be polynomial
    Tensor2 poly = total;
    for (const auto& [k, c] : X.pole_numerator.entries()) poly.add(k, -(c * pole));
    for (const auto& [k, c] : poly.entries())
        if (!c.is_polynomial())
            throw std::domain_error("gauge transform left a non-polynomial part at entry e" +
                                    std::to_string(k[0]) + std::to_string(k[1]));
    out.poly_part = poly;
    return out;
}

} // namespace ybe
