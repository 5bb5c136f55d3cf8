#include "ybe/pde.hpp"

#include "ybe/matrix.hpp"

namespace ybe {

namespace {

Tensor2 residual_for(const Solution& x, const LieElement& h_of_u) {
    const VarSetPtr& vs = x.vars;
    RatFunc u = RatFunc::variable(vs, "u"), v = RatFunc::variable(vs, "v");
    Tensor2 t = x.full_tensor();

    Tensor2 euler(x.alg, vs);
    for (const auto& [k, c] : t.entries())
        euler.add(k, u * c.derivative("u") + v * c.derivative("v"));

    LieElement h_u = h_of_u;
    LieElement h_v(x.alg, vs);
    for (const auto& [k, c] : h_of_u.coeffs()) h_v.add(k.first, k.second, c.subst({{"u", v}}, vs));

    Tensor2 br(x.alg, vs);
    for (const auto& [k, c] : t.entries()) {
        LieElement leg1 = LieElement::unit(x.alg, vs, k[0], k[1]);
        LieElement leg2 = LieElement::unit(x.alg, vs, k[2], k[3]);
        LieElement b1 = bracket(h_u, leg1);
        LieElement b2 = bracket(h_v, leg2);
        for (const auto& [ka, ca] : b1.coeffs()) br.add(ka.first, ka.second, k[2], k[3], c * ca);
        for (const auto& [kb, cb] : b2.coeffs()) br.add(k[0], k[1], kb.first, kb.second, c * cb);
    }
    return euler - br;
}

} // namespace

LieElement h_contraction_candidate(const Solution& x) {
    const VarSetPtr& vs = x.vars;
    RatFunc u = RatFunc::variable(vs, "u");
    LieElement h(x.alg, vs);
    // bracket contraction of the polynomial part on the diagonal, with the
    // trace-form Casimir constant 2N scaled out
    for (const auto& [k, c] : x.poly_part.entries()) {
        RatFunc diag = c.subst({{"v", u}});
        LieElement a = LieElement::unit(x.alg, vs, k[0], k[1]);
        LieElement b = LieElement::unit(x.alg, vs, k[2], k[3]);
        LieElement br = bracket(a, b);
        for (const auto& [kk, cc] : br.coeffs())
            h.add(kk.first, kk.second, diag * cc * Rational(1, 2 * x.alg.N));
    }
    return h;
}

LieElement h_of_z(const Solution& x) {
    LieElement cand = h_contraction_candidate(x);
    if (residual_for(x, cand).is_zero()) return cand;

    // solve for polynomial h(z) = sum_d z^d sum_ij c_{d,ij} e_ij exactly;
    // unknown coefficients live over the parameter subfield
    const VarSetPtr& vs = x.vars;
    const int N = x.alg.N;
    int degp = 0;
    std::size_t ui = vs->index("u"), vi = vs->index("v");
    for (const auto& [k, c] : x.poly_part.entries())
        if (c.is_polynomial())
            for (const auto& [m, cc] : c.num().terms())
                degp = std::max(degp, m[ui] + m[vi]);
    const int D = degp + 1;

    struct Unk { int d, i, j; };
    std::vector<Unk> unknowns;
    for (int d = 0; d <= D; ++d)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) unknowns.push_back({d, i, j});

    RatFunc u = RatFunc::variable(vs, "u");
    auto basis_elt = [&](const Unk& w) {
        return LieElement::unit(x.alg, vs, w.i, w.j, u.pow(w.d));
    };

    Tensor2 base = residual_for(x, LieElement(x.alg, vs));
    std::vector<Tensor2> deltas;
    for (const auto& w : unknowns) deltas.push_back(residual_for(x, basis_elt(w)) - base);

    // rows: (entry key, (u,v)-monomial) after clearing (u-v)^2
    RatFunc v = RatFunc::variable(vs, "v");
    RatFunc clear = (u - v) * (u - v);
    std::map<Tensor2::Key, int> keys;
    for (const auto& [k, c] : base.entries()) keys.emplace(k, 0);
    for (const auto& d : deltas)
        for (const auto& [k, c] : d.entries()) keys.emplace(k, 0);

    std::vector<std::vector<RatFunc>> rows;
    std::vector<RatFunc> rhs;
    for (const auto& [k, _] : keys) {
        auto entry = [&](const Tensor2& t) {
            auto it = t.entries().find(k);
            return it == t.entries().end() ? RatFunc::zero(vs) : it->second;
        };
        Poly p0 = (entry(base) * clear).num();
        std::vector<Poly> pi;
        for (const auto& d : deltas) pi.push_back((entry(d) * clear).num());
        std::map<std::pair<int, int>, int> monos;
        auto addm = [&](const Poly& p) {
            for (const auto& [m, cc] : p.terms()) monos.emplace(std::make_pair(m[ui], m[vi]), 0);
        };
        addm(p0);
        for (const auto& p : pi) addm(p);
        for (const auto& [uvm, _2] : monos) {
            auto mono_coeff = [&](const Poly& p) {
                // collect the coefficient of u^a v^b as a parameter polynomial
                Poly out(vs);
                for (const auto& [m, cc] : p.terms()) {
                    if (m[ui] != uvm.first || m[vi] != uvm.second) continue;
                    Mono rest = m;
                    rest[ui] = rest[vi] = 0;
                    out.add_term(rest, cc);
                }
                return out;
            };
            std::vector<RatFunc> row;
            for (const auto& p : pi) row.push_back(RatFunc(mono_coeff(p)));
            rhs.push_back(RatFunc(Poly(vs)) - RatFunc(mono_coeff(p0)));
            rows.push_back(std::move(row));
        }
    }
    MatRF A(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()), vs);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            A.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    auto sol = solve_linear(A, rhs);
    if (!sol) return cand;   // no exact certificate of the assumed degree

    LieElement h(x.alg, vs);
    for (std::size_t j = 0; j < unknowns.size(); ++j)
        if (!sol->particular[j].is_zero())
            h.add(unknowns[j].i, unknowns[j].j, sol->particular[j] * u.pow(unknowns[j].d));
    return h;
}

Tensor2 pde_residual(const Solution& x) { return residual_for(x, h_of_z(x)); }

} // namespace ybe
