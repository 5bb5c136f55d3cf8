#include "ybe/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace ybe {

void LoopElt::add_loop(int i, int j, int deg, const RatFunc& c) {
    if (c.is_zero()) return;
    auto key = std::make_tuple(i, j, deg);
    auto it = lau_.find(key);
    if (it == lau_.end()) {
        lau_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) lau_.erase(it);
    }
}

void LoopElt::add_const(int i, int j, const RatFunc& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = fin_.find(key);
    if (it == fin_.end()) {
        fin_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) fin_.erase(it);
    }
}

LoopElt LoopElt::operator+(const LoopElt& o) const {
    LoopElt r = *this;
    for (const auto& [k, c] : o.lau_) r.add_loop(std::get<0>(k), std::get<1>(k), std::get<2>(k), c);
    for (const auto& [k, c] : o.fin_) r.add_const(k.first, k.second, c);
    return r;
}

LoopElt LoopElt::operator*(const RatFunc& c) const {
    LoopElt r(alg_, vars_);
    for (const auto& [k, v] : lau_)
        r.add_loop(std::get<0>(k), std::get<1>(k), std::get<2>(k), v * c);
    for (const auto& [k, v] : fin_) r.add_const(k.first, k.second, v * c);
    return r;
}

std::string LoopElt::to_string() const {
    std::ostringstream os;
    os << "(";
    for (const auto& [k, c] : lau_)
        os << "(" << c.to_string() << ")e" << std::get<0>(k) << std::get<1>(k) << "u^"
           << std::get<2>(k) << " ";
    os << "| ";
    for (const auto& [k, c] : fin_) os << "(" << c.to_string() << ")e" << k.first << k.second << " ";
    os << ")";
    return os.str();
}

LoopElt loop_bracket(const LoopElt& x, const LoopElt& y) {
    LoopElt r(x.algebra(), x.vars());
    for (const auto& [a, ca] : x.loop_part())
        for (const auto& [b, cb] : y.loop_part()) {
            RatFunc c = ca * cb;
            int deg = std::get<2>(a) + std::get<2>(b);
            if (std::get<1>(a) == std::get<0>(b)) r.add_loop(std::get<0>(a), std::get<1>(b), deg, c);
            if (std::get<1>(b) == std::get<0>(a)) r.add_loop(std::get<0>(b), std::get<1>(a), deg, -c);
        }
    for (const auto& [a, ca] : x.const_part())
        for (const auto& [b, cb] : y.const_part()) {
            RatFunc c = ca * cb;
            if (a.second == b.first) r.add_const(a.first, b.second, c);
            if (b.second == a.first) r.add_const(b.first, a.second, -c);
        }
    return r;
}

RatFunc loop_form(const LoopElt& x, const LoopElt& y) {
    RatFunc s = RatFunc::zero(x.vars());
    for (const auto& [a, ca] : x.loop_part()) {
        auto it = y.loop_part().find({std::get<1>(a), std::get<0>(a), -std::get<2>(a)});
        if (it != y.loop_part().end()) s = s + ca * it->second;
    }
    for (const auto& [a, ca] : x.const_part()) {
        auto it = y.const_part().find({a.second, a.first});
        if (it != y.const_part().end()) s = s - ca * it->second;
    }
    return s;
}

namespace {

// half-loop basis elements with Laurent degree >= -cutoff
std::vector<LoopElt> half_loop_basis(Algebra a, const VarSetPtr& vs, int cutoff) {
    std::vector<LoopElt> basis;
    RatFunc one = RatFunc::one(vs);
    for (int k = 1; k <= cutoff; ++k) {
        for (int i = 1; i <= a.N; ++i)
            for (int j = 1; j <= a.N; ++j) {
                if (i == j) continue;
                LoopElt w(a, vs);
                w.add_loop(i, j, -k, one);
                basis.push_back(std::move(w));
            }
        for (int s = 1; s < a.N; ++s) {
            LoopElt w(a, vs);
            w.add_loop(s, s, -k, one);
            w.add_loop(s + 1, s + 1, -k, -one);
            basis.push_back(std::move(w));
        }
    }
    // constant slice: upper-triangular on the loop side, lower on the finite
    // side, opposite Cartan components
    for (int i = 1; i <= a.N; ++i)
        for (int j = i + 1; j <= a.N; ++j) {
            LoopElt w(a, vs);
            w.add_loop(i, j, 0, one);
            basis.push_back(w);
            LoopElt w2(a, vs);
            w2.add_const(j, i, one);
            basis.push_back(w2);
        }
    for (int s = 1; s < a.N; ++s) {
        LoopElt w(a, vs);
        w.add_loop(s, s, 0, one);
        w.add_loop(s + 1, s + 1, 0, -one);
        w.add_const(s, s, -one);
        w.add_const(s + 1, s + 1, one);
        basis.push_back(w);
    }
    return basis;
}

// embedding of x u^m into the polynomial half: (x u^m, x delta_{m,0})
LoopElt poly_embed(Algebra a, const VarSetPtr& vs, int i, int j, int m, const RatFunc& c) {
    LoopElt v(a, vs);
    v.add_loop(i, j, m, c);
    if (m == 0) v.add_const(i, j, c);
    return v;
}

} // namespace

OracleReport subalgebra_oracle(const Solution& X, int cutoff) {
    if (X.kind != Solution::quasi_trigonometric)
        throw std::invalid_argument("oracle requires a quasi-trigonometric solution");
    if (X.alg.kind != Algebra::sl)
        throw std::invalid_argument("oracle is defined over sl(N) only");
    const VarSetPtr& vs = X.vars;
    Algebra a = X.alg;

    Tensor2 r = X.poly_part - standard_r0(a, vs);
    std::size_t ui = vs->index("u"), vi = vs->index("v");

    // r as a finite list of (e_ij u^m) (x) (e_kl u^n) terms
    struct Term {
        int i, j, m, k, l, n;
        RatFunc c;
    };
    std::vector<Term> terms;
    int max_deg = 0;
    for (const auto& [key, coeff] : r.entries()) {
        if (!coeff.is_polynomial())
            throw std::invalid_argument("polynomial part must have polynomial coefficients");
        for (const auto& [mono, c] : coeff.num().terms()) {
            Mono rest = mono;
            int m = rest[ui], n = rest[vi];
            rest[ui] = rest[vi] = 0;
            RatFunc cc(Poly::monomial(vs, rest, c));
            terms.push_back({key[0], key[1], m, key[2], key[3], n, cc});
            max_deg = std::max({max_deg, m, n});
        }
    }
    if (cutoff < max_deg + 1)
        throw std::invalid_argument("cutoff must exceed the polynomial degree");

    auto basis = half_loop_basis(a, vs, cutoff);

    // F(w) = sum_t c_t Q(w, embed(e_kl u^n)) embed(e_ij u^m)
    auto F = [&](const LoopElt& w) {
        LoopElt out(a, vs);
        for (const auto& t : terms) {
            RatFunc q = loop_form(w, poly_embed(a, vs, t.k, t.l, t.n, RatFunc::one(vs)));
            if (!q.is_zero()) out = out + poly_embed(a, vs, t.i, t.j, t.m, t.c * q);
        }
        return out;
    };

    std::vector<LoopElt> mapped;
    mapped.reserve(basis.size());
    for (const auto& w : basis) mapped.push_back(w + F(w));

    const int n = static_cast<int>(mapped.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (!loop_form(mapped[i], mapped[j]).is_zero()) {
                OracleReport rep;
                rep.pass = false;
                std::ostringstream os;
                os << "isotropy fails at basis pair (" << i << "," << j << ")";
                rep.witness = os.str();
                return rep;
            }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LoopElt br = loop_bracket(mapped[i], mapped[j]);
            for (int k = 0; k < n; ++k)
                if (!loop_form(br, mapped[k]).is_zero()) {
                    OracleReport rep;
                    rep.pass = false;
                    std::ostringstream os;
                    os << "closure fails at basis triple (" << i << "," << j << "," << k << ")";
                    rep.witness = os.str();
                    return rep;
                }
        }
    return OracleReport{true, ""};
}

} // namespace ybe
