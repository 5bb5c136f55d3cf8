#include "ybe/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace ybe {

Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Poly Poly::constant(VarSetPtr vars, const Rational& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Mono(p.vars_->size(), 0)] = c;
    return p;
}

Poly Poly::variable(VarSetPtr vars, const std::string& name, int exp) {
    Poly p(vars);
    Mono m(vars->size(), 0);
    m[vars->index(name)] = exp;
    p.terms_[m] = 1;
    return p;
}

Poly Poly::monomial(VarSetPtr vars, Mono m, const Rational& c) {
    Poly p(std::move(vars));
    if (m.size() != p.vars_->size()) throw std::invalid_argument("monomial arity mismatch");
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational Poly::constant_term() const {
    Mono zero(vars_ ? vars_->size() : 0, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::is_one() const { return is_constant() && constant_term() == 1; }

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (int e : m) t += e;
        if (t > d) d = t;
    }
    return d;
}

int Poly::degree_in(std::size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        if (m[var] > d) d = m[var];
    return d;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(vars_);
    Mono m(vars_ ? vars_->size() : 0);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

bool Poly::operator<(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return false;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(vars_, 1);
    Poly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::subst(const std::map<std::size_t, Poly>& bindings) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        Mono rest = m;
        Poly term = Poly::constant(vars_, c);
        for (const auto& [v, p] : bindings) {
            if (rest[v] != 0) {
                term = term * p.pow(rest[v]);
                rest[v] = 0;
            }
        }
        r = r + term * Poly::monomial(vars_, rest, 1);
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return Poly(vars_);
    Poly rem = *this;
    Poly quot(vars_);
    auto lead_d = d.terms_.rbegin();   // lex-leading term
    const std::size_t n = vars_->size();
    while (!rem.is_zero()) {
        auto lead_r = rem.terms_.rbegin();
        Mono q(n);
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = lead_r->first[i] - lead_d->first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rational qc = lead_r->second / lead_d->second;
        quot.add_term(q, qc);
        rem = rem - d * Poly::monomial(vars_, q, qc);
    }
    return quot;
}

std::pair<Rational, Poly> Poly::content_normalized() const {
    if (is_zero()) return {Rational(0), Poly(vars_)};
    BigInt num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational content(num_gcd, den_lcm);
    // sign from the lex-leading coefficient
    if (terms_.rbegin()->second < 0) content = -content;
    Poly prim(vars_);
    for (const auto& [m, c] : terms_) prim.terms_[m] = c / content;
    return {content, prim};
}

Poly Poly::lifted(const VarSetPtr& bigger) const {
    std::vector<std::size_t> where(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) where[i] = bigger->index(vars_->name(i));
    Poly r(bigger);
    for (const auto& [m, c] : terms_) {
        Mono big(bigger->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) big[where[i]] = m[i];
        r.terms_[std::move(big)] = c;
    }
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool any_var = false;
        for (int e : m)
            if (e) any_var = true;
        if (a != 1 || !any_var) os << rat_to_string(a);
        bool star = (a != 1 || !any_var);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) continue;
            if (star) os << "*";
            os << vars_->name(i);
            if (m[i] != 1) os << "^" << m[i];
            star = true;
        }
    }
    return os.str();
}

} // namespace ybe
