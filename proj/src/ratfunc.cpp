#include "ybe/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace ybe {

RatFunc::RatFunc(Poly num, const Poly& den) : num_(std::move(num)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    push_den_factor(den, 1);
    reduce();
}

RatFunc RatFunc::constant(const VarSetPtr& vars, const Rational& c) {
    return RatFunc(Poly::constant(vars, c));
}

RatFunc RatFunc::variable(const VarSetPtr& vars, const std::string& name, int exp) {
    if (exp >= 0) return RatFunc(Poly::variable(vars, name, exp));
    RatFunc r(Poly::constant(vars, 1));
    r.push_den_factor(Poly::variable(vars, name, -exp), 1);
    return r;
}

void RatFunc::push_den_factor(const Poly& f, int power) {
    if (power == 0) return;
    if (power < 0) throw std::invalid_argument("negative factor power");
    auto [c, prim] = f.content_normalized();
    if (prim.is_zero()) throw std::domain_error("zero denominator factor");
    Rational s = 1;
    for (int i = 0; i < power; ++i) s *= c;
    num_ = num_ * (Rational(1) / s);
    if (!prim.is_one()) den_[prim] += power;
}

Poly RatFunc::den_expanded() const {
    Poly d = Poly::constant(num_.vars(), 1);
    for (const auto& [f, e] : den_) d = d * f.pow(e);
    return d;
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant");
    return num_.constant_term();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = num_.divided_exactly_by(it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    RatFunc r;
    r.num_ = Poly(num_.vars());
    // lcm of the factored denominators
    r.den_ = den_;
    for (const auto& [f, e] : o.den_) {
        auto it = r.den_.find(f);
        if (it == r.den_.end()) r.den_[f] = e;
        else it->second = std::max(it->second, e);
    }
    Poly a = num_, b = o.num_;
    for (const auto& [f, e] : r.den_) {
        auto ita = den_.find(f);
        auto itb = o.den_.find(f);
        int da = e - (ita == den_.end() ? 0 : ita->second);
        int db = e - (itb == o.den_.end() ? 0 : itb->second);
        if (da) a = a * f.pow(da);
        if (db) b = b * f.pow(db);
    }
    r.num_ = a + b;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc r;
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    for (const auto& [f, e] : o.den_) r.den_[f] += e;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator*(const Rational& c) const {
    RatFunc r = *this;
    r.num_ = r.num_ * c;
    if (c == 0) r.den_.clear();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    RatFunc r;
    r.num_ = den_expanded();
    r.den_.clear();
    r.push_den_factor(num_, 1);
    r.reduce();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc r = one(vars());
    RatFunc base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

bool RatFunc::operator==(const RatFunc& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_expanded() == o.num_ * den_expanded();
}

RatFunc RatFunc::subst(const std::map<std::string, RatFunc>& bindings) const {
    return subst(bindings, vars());
}

RatFunc RatFunc::subst(const std::map<std::string, RatFunc>& bindings,
                       const VarSetPtr& target) const {
    const VarSetPtr& src = vars();
    // variables that actually occur somewhere in this value
    std::vector<bool> occurs(src->size(), false);
    auto mark = [&](const Poly& p) {
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) occurs[i] = true;
    };
    mark(num_);
    for (const auto& [f, e] : den_) mark(f);
    std::vector<RatFunc> images(src->size());
    for (std::size_t i = 0; i < src->size(); ++i) {
        auto it = bindings.find(src->name(i));
        if (it != bindings.end()) images[i] = it->second;
        else if (occurs[i]) images[i] = RatFunc::variable(target, src->name(i));
    }
    auto eval = [&](const Poly& p) {
        RatFunc acc = RatFunc::zero(target);
        for (const auto& [m, c] : p.terms()) {
            RatFunc term = RatFunc::constant(target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) term = term * images[i].pow(m[i]);
            acc = acc + term;
        }
        return acc;
    };
    RatFunc r = eval(num_);
    for (const auto& [f, e] : den_) {
        RatFunc fd = eval(f);
        if (fd.is_zero())
            throw std::domain_error("substitution makes denominator vanish: " + f.to_string());
        r = r * fd.pow(-e);
    }
    return r;
}

RatFunc RatFunc::derivative(const std::string& var) const {
    std::size_t v = vars()->index(var);
    RatFunc r(num_.derivative(v));
    for (const auto& [f, e] : den_) {
        RatFunc inv_f;
        inv_f.num_ = Poly::constant(vars(), 1);
        inv_f.den_[f] = e;
        r = r * inv_f;
    }
    for (const auto& [f, e] : den_) {
        Poly fp = f.derivative(v);
        if (fp.is_zero()) continue;
        RatFunc term;
        term.num_ = num_ * fp * Rational(-e);
        term.den_ = den_;
        term.den_[f] += 1;
        term.reduce();
        r = r + term;
    }
    return r;
}

RatFunc RatFunc::lifted(const VarSetPtr& bigger) const {
    RatFunc r(num_.lifted(bigger));
    for (const auto& [f, e] : den_) r.den_[f.lifted(bigger)] = e;
    return r;
}

std::string RatFunc::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(";
    bool first = true;
    for (const auto& [f, e] : den_) {
        if (!first) os << "*";
        first = false;
        os << "(" << f.to_string() << ")";
        if (e != 1) os << "^" << e;
    }
    os << ")";
    return os.str();
}

} // namespace ybe
