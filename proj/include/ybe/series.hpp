#pragma once

#include <vector>

#include "ybe/ratfunc.hpp"

namespace ybe {

// Truncated power series in one registered deformation symbol. Arithmetic
// drops every term of degree > order; the coefficient vector always has
// length order+1.
class TruncSeries {
public:
    TruncSeries(VarSetPtr vars, std::string var, int order);

    const std::string& var() const { return var_; }
    int order() const { return order_; }
    const RatFunc& coeff(int k) const { return coeffs_.at(k); }
    RatFunc& coeff(int k) { return coeffs_.at(k); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    bool operator==(const TruncSeries& o) const;
    bool is_zero() const;

private:
    VarSetPtr vars_;
    std::string var_;
    int order_;
    std::vector<RatFunc> coeffs_;
};

// Expand f at q = 1 + h up to the given order, where h names the deformation
// symbol (must be registered and unused in f). The denominator of f must be a
// unit at h = 0; otherwise a domain_error names the offending factor.
TruncSeries expand_series(const RatFunc& f, const std::string& qvar,
                          const std::string& hvar, int order);

// Taylor coefficients of f in the registered variable `var` around 0; the
// denominator must not vanish at var = 0.
TruncSeries taylor_series(const RatFunc& f, const std::string& var, int order);

} // namespace ybe
