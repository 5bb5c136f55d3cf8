#include "ybe/series.hpp"

#include <stdexcept>

namespace ybe {

TruncSeries::TruncSeries(VarSetPtr vars, std::string var, int order)
    : vars_(std::move(vars)), var_(std::move(var)), order_(order) {
    if (order_ < 0) throw std::invalid_argument("negative series order");
    coeffs_.assign(order_ + 1, RatFunc::zero(vars_));
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(vars_, var_, order_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(vars_, var_, order_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(vars_, var_, order_);
    for (int i = 0; i <= order_; ++i)
        for (int j = 0; i + j <= order_; ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (order_ != o.order_) return false;
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[k] != o.coeffs_[k]) return false;
    return true;
}

bool TruncSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

// split p into coefficients of h^0..h^order (each h-free), failing if p has
// h-degree beyond order is fine: those terms are dropped
std::vector<Poly> h_coefficients(const Poly& p, std::size_t h, int order) {
    std::vector<Poly> out(order + 1, Poly(p.vars()));
    for (const auto& [m, c] : p.terms()) {
        int k = m[h];
        if (k > order) continue;
        Mono rest = m;
        rest[h] = 0;
        out[k].add_term(rest, c);
    }
    return out;
}

} // namespace

TruncSeries taylor_series(const RatFunc& f, const std::string& var, int order) {
    VarSetPtr vars = f.vars();
    std::size_t h = vars->index(var);
    Poly num = f.num();
    Poly den = Poly::constant(vars, 1);
    for (const auto& [fac, e] : f.den_factors()) {
        auto f0 = h_coefficients(fac, h, 0)[0];
        if (f0.is_zero())
            throw std::domain_error("pole at 0 from denominator factor: " + fac.to_string());
        den = den * fac.pow(e);
    }
    auto n = h_coefficients(num, h, order);
    auto d = h_coefficients(den, h, order);
    RatFunc d0_inv = RatFunc(d[0]).inverse();
    TruncSeries s(vars, var, order);
    for (int k = 0; k <= order; ++k) {
        RatFunc acc(n[k]);
        for (int j = 1; j <= k; ++j) acc = acc - RatFunc(d[j]) * s.coeff(k - j);
        s.coeff(k) = acc * d0_inv;
    }
    return s;
}

TruncSeries expand_series(const RatFunc& f, const std::string& qvar,
                          const std::string& hvar, int order) {
    VarSetPtr vars = f.vars()->contains(hvar) ? f.vars() : f.vars()->extend({hvar});
    std::size_t h = vars->index(hvar);
    Poly one_plus_h = Poly::constant(vars, 1) + Poly::variable(vars, hvar);
    std::map<std::size_t, Poly> bind{{vars->index(qvar), one_plus_h}};

    Poly num = f.num().lifted(vars).subst(bind);
    Poly den = Poly::constant(vars, 1);
    for (const auto& [fac, e] : f.den_factors()) {
        Poly fh = fac.lifted(vars).subst(bind);
        auto fh0 = h_coefficients(fh, h, 0)[0];
        if (fh0.is_zero())
            throw std::domain_error("pole at h=0 from denominator factor: " + fac.to_string());
        den = den * fh.pow(e);
    }

    auto n = h_coefficients(num, h, order);
    auto d = h_coefficients(den, h, order);
    RatFunc d0_inv = RatFunc(d[0]).inverse();

    TruncSeries s(vars, hvar, order);
    for (int k = 0; k <= order; ++k) {
        RatFunc acc(n[k]);
        for (int j = 1; j <= k; ++j) acc = acc - RatFunc(d[j]) * s.coeff(k - j);
        s.coeff(k) = acc * d0_inv;
    }
    return s;
}

} // namespace ybe
