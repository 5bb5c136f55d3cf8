#include "ybe/lie.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ybe {

LieElement LieElement::unit(Algebra a, VarSetPtr vars, int i, int j, const RatFunc& c) {
    LieElement e(a, std::move(vars));
    e.add(i, j, c);
    return e;
}

LieElement LieElement::unit(Algebra a, VarSetPtr vars, int i, int j) {
    RatFunc one = RatFunc::one(vars);
    return unit(a, std::move(vars), i, j, one);
}

void LieElement::add(int i, int j, const RatFunc& c) {
    if (i < 1 || i > alg_.N || j < 1 || j > alg_.N) throw std::out_of_range("matrix unit index");
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

RatFunc LieElement::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? RatFunc::zero(vars_) : it->second;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k.first, k.second, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add(k.first, k.second, -c);
    return r;
}

LieElement LieElement::operator*(const RatFunc& c) const {
    LieElement r(alg_, vars_);
    for (const auto& [k, v] : coeffs_) r.add(k.first, k.second, v * c);
    return r;
}

LieElement LieElement::operator*(const Rational& c) const {
    return *this * RatFunc::constant(vars_, c);
}

bool LieElement::operator==(const LieElement& o) const {
    return (*this - o).is_zero();
}

std::string LieElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")e" << k.first << k.second;
    }
    return os.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (!(x.algebra() == y.algebra())) throw std::invalid_argument("algebra mismatch in bracket");
    LieElement r(x.algebra(), x.vars());
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs()) {
            RatFunc c = ca * cb;
            // [e_ij, e_kl] = d_jk e_il - d_li e_kj
            if (a.second == b.first) r.add(a.first, b.second, c);
            if (b.second == a.first) r.add(b.first, a.second, -c);
        }
    return r;
}

RatFunc trace_form(const LieElement& x, const LieElement& y) {
    if (!(x.algebra() == y.algebra())) throw std::invalid_argument("algebra mismatch in trace form");
    RatFunc s = RatFunc::zero(x.vars());
    for (const auto& [a, ca] : x.coeffs()) {
        RatFunc cb = y.coeff(a.second, a.first);
        if (!cb.is_zero()) s = s + ca * cb;
    }
    return s;
}

void Tensor2::add(int i, int j, int k, int l, const RatFunc& c) {
    add(Key{i, j, k, l}, c);
}

void Tensor2::add(const Key& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

RatFunc Tensor2::entry(int i, int j, int k, int l) const {
    auto it = entries_.find(Key{i, j, k, l});
    return it == entries_.end() ? RatFunc::zero(vars_) : it->second;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 r = *this;
    for (const auto& [k, c] : o.entries_) r.add(k, c);
    return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 r = *this;
    for (const auto& [k, c] : o.entries_) r.add(k, -c);
    return r;
}

Tensor2 Tensor2::operator*(const RatFunc& c) const {
    Tensor2 r(alg_, vars_);
    for (const auto& [k, v] : entries_) r.add(k, v * c);
    return r;
}

Tensor2 Tensor2::operator*(const Rational& c) const {
    return *this * RatFunc::constant(vars_, c);
}

bool Tensor2::operator==(const Tensor2& o) const { return (*this - o).is_zero(); }

Tensor2 Tensor2::swapped_legs() const {
    Tensor2 r(alg_, vars_);
    for (const auto& [k, c] : entries_) r.add(Key{k[2], k[3], k[0], k[1]}, c);
    return r;
}

Tensor2 Tensor2::subst(const std::map<std::string, RatFunc>& bindings,
                       const VarSetPtr& target) const {
    Tensor2 r(alg_, target);
    for (const auto& [k, c] : entries_) r.add(k, c.subst(bindings, target));
    return r;
}

Tensor2 Tensor2::lifted(const VarSetPtr& bigger) const {
    Tensor2 r(alg_, bigger);
    for (const auto& [k, c] : entries_) r.add(k, c.lifted(bigger));
    return r;
}

Tensor2 Tensor2::map_units(const std::function<LieElement(int, int)>& phi) const {
    Tensor2 r(alg_, vars_);
    for (const auto& [k, c] : entries_) {
        LieElement a = phi(k[0], k[1]);
        LieElement b = phi(k[2], k[3]);
        for (const auto& [ka, ca] : a.coeffs())
            for (const auto& [kb, cb] : b.coeffs())
                r.add(ka.first, ka.second, kb.first, kb.second, c * ca * cb);
    }
    return r;
}

std::string Tensor2::to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")e" << k[0] << k[1] << "(x)e" << k[2] << k[3];
    }
    return os.str();
}

void Tensor3::add(const Key& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    Tensor3 r = *this;
    for (const auto& [k, c] : o.entries_) r.add(k, c);
    return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    Tensor3 r = *this;
    for (const auto& [k, c] : o.entries_) r.add(k, -c);
    return r;
}

bool Tensor3::operator==(const Tensor3& o) const { return (*this - o).is_zero(); }

Tensor2 tensor(const LieElement& x, const LieElement& y) {
    Tensor2 r(x.algebra(), x.vars());
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs())
            r.add(a.first, a.second, b.first, b.second, ca * cb);
    return r;
}

Tensor2 wedge(const LieElement& x, const LieElement& y) {
    return tensor(x, y) - tensor(y, x);
}

Tensor2 casimir(Algebra a, VarSetPtr vars) {
    Tensor2 om(a, vars);
    RatFunc one = RatFunc::one(vars);
    for (int i = 1; i <= a.N; ++i)
        for (int j = 1; j <= a.N; ++j)
            om.add(i, j, j, i, one);
    if (a.kind == Algebra::sl) {
        RatFunc c = RatFunc::constant(vars, Rational(-1, a.N));
        for (int i = 1; i <= a.N; ++i)
            for (int j = 1; j <= a.N; ++j)
                om.add(i, i, j, j, c);
    }
    return om;
}

Tensor2 cartan_part(const Tensor2& t) {
    Tensor2 r(t.algebra(), t.vars());
    for (const auto& [k, c] : t.entries())
        if (k[0] == k[1] && k[2] == k[3]) r.add(k, c);
    return r;
}

Tensor2 ad_tensor(const LieElement& x, const Tensor2& t) {
    Tensor2 r(t.algebra(), t.vars());
    for (const auto& [k, c] : t.entries()) {
        LieElement leg1 = LieElement::unit(t.algebra(), t.vars(), k[0], k[1]);
        LieElement leg2 = LieElement::unit(t.algebra(), t.vars(), k[2], k[3]);
        LieElement b1 = bracket(x, leg1);
        LieElement b2 = bracket(x, leg2);
        for (const auto& [ka, ca] : b1.coeffs())
            r.add(ka.first, ka.second, k[2], k[3], c * ca);
        for (const auto& [kb, cb] : b2.coeffs())
            r.add(k[0], k[1], kb.first, kb.second, c * cb);
    }
    return r;
}

Tensor3 ad_tensor(const LieElement& x, const Tensor3& t) {
    Tensor3 r(t.algebra(), x.vars());
    for (const auto& [k, c] : t.entries()) {
        for (int leg = 0; leg < 3; ++leg) {
            LieElement u = LieElement::unit(t.algebra(), x.vars(), k[2 * leg], k[2 * leg + 1]);
            LieElement b = bracket(x, u);
            for (const auto& [kb, cb] : b.coeffs()) {
                Tensor3::Key kk = k;
                kk[2 * leg] = kb.first;
                kk[2 * leg + 1] = kb.second;
                r.add(kk, c * cb);
            }
        }
    }
    return r;
}

namespace {

std::pair<int, int> slot_legs(int slot) {
    switch (slot) {
        case 12: return {0, 1};
        case 13: return {0, 2};
        case 23: return {1, 2};
    }
    throw std::invalid_argument("slot must be 12, 13 or 23");
}

} // namespace

Tensor3 embed(const Tensor2& t, int slot) {
    auto [p, q] = slot_legs(slot);
    Tensor3 r(t.algebra(), t.vars());
    int N = t.algebra().N;
    for (const auto& [k, c] : t.entries())
        for (int d = 1; d <= N; ++d) {
            Tensor3::Key kk{0, 0, 0, 0, 0, 0};
            kk[2 * p] = k[0];
            kk[2 * p + 1] = k[1];
            kk[2 * q] = k[2];
            kk[2 * q + 1] = k[3];
            for (int leg = 0; leg < 3; ++leg)
                if (leg != p && leg != q) {
                    kk[2 * leg] = d;
                    kk[2 * leg + 1] = d;
                }
            r.add(kk, c);
        }
    return r;
}

Tensor3 bracket_embedded(const Tensor2& A, int slotA, const Tensor2& B, int slotB) {
    auto [a1, a2] = slot_legs(slotA);
    auto [b1, b2] = slot_legs(slotB);
    int shared = -1;
    for (int leg : {a1, a2})
        for (int other : {b1, b2})
            if (leg == other) shared = leg;
    if (shared < 0) throw std::invalid_argument("placements must share a leg");
    int a_free = (a1 == shared) ? a2 : a1;
    int b_free = (b1 == shared) ? b2 : b1;

    Tensor3 r(A.algebra(), A.vars());
    for (const auto& [ka, ca] : A.entries()) {
        int ai = (a1 == shared) ? ka[0] : ka[2];
        int aj = (a1 == shared) ? ka[1] : ka[3];
        int afi = (a1 == shared) ? ka[2] : ka[0];
        int afj = (a1 == shared) ? ka[3] : ka[1];
        for (const auto& [kb, cb] : B.entries()) {
            int bi = (b1 == shared) ? kb[0] : kb[2];
            int bj = (b1 == shared) ? kb[1] : kb[3];
            int bfi = (b1 == shared) ? kb[2] : kb[0];
            int bfj = (b1 == shared) ? kb[3] : kb[1];
            RatFunc c = ca * cb;
            auto emit = [&](int si, int sj, const RatFunc& coeff) {
                Tensor3::Key kk{0, 0, 0, 0, 0, 0};
                kk[2 * shared] = si;
                kk[2 * shared + 1] = sj;
                kk[2 * a_free] = afi;
                kk[2 * a_free + 1] = afj;
                kk[2 * b_free] = bfi;
                kk[2 * b_free + 1] = bfj;
                r.add(kk, coeff);
            };
            // [e_{ai,aj}, e_{bi,bj}] on the shared leg
            if (aj == bi) emit(ai, bj, c);
            if (bj == ai) emit(bi, aj, -c);
        }
    }
    return r;
}

RootDatum RootDatum::make(Algebra a) {
    RootDatum rd;
    rd.alg = a;
    for (int i = 1; i < a.N; ++i) {
        std::vector<int> alpha(a.N, 0);
        alpha[i - 1] = 1;
        alpha[i] = -1;
        rd.simple_roots.push_back(alpha);
        rd.max_root_coeffs.push_back(1);
        rd.multiplicity_free.push_back(true);
    }
    for (int i = 1; i <= a.N; ++i)
        for (int j = i + 1; j <= a.N; ++j)
            rd.positive_roots.emplace_back(i, j);
    return rd;
}

} // namespace ybe
