#pragma once

#include <map>
#include <string>

#include "ybe/poly.hpp"

namespace ybe {

// Rational function num/den over Q. The denominator is kept as a product of
// primitive polynomial factors with positive powers; factors are trial-divided
// out of the numerator after every operation, which keeps the denominators of
// long tensor computations down to products of the handful of printed pole
// factors. Equality is decided by cross-multiplication, never by string form.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)) {}
    RatFunc(Poly num, const Poly& den);

    static RatFunc zero(const VarSetPtr& vars) { return RatFunc(Poly(vars)); }
    static RatFunc one(const VarSetPtr& vars) { return constant(vars, 1); }
    static RatFunc constant(const VarSetPtr& vars, const Rational& c);
    static RatFunc variable(const VarSetPtr& vars, const std::string& name, int exp = 1);

    const VarSetPtr& vars() const { return num_.vars(); }
    const Poly& num() const { return num_; }
    const std::map<Poly, int>& den_factors() const { return den_; }
    Poly den_expanded() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;   // throws on zero divisor
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc operator*(const Rational& c) const;
    RatFunc inverse() const;
    RatFunc pow(int n) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // substitute variables by rational functions over the target registry;
    // unbound variables must exist in the target by name. Throws when a
    // denominator vanishes identically.
    RatFunc subst(const std::map<std::string, RatFunc>& bindings, const VarSetPtr& target) const;
    RatFunc subst(const std::map<std::string, RatFunc>& bindings) const;

    RatFunc derivative(const std::string& var) const;
    RatFunc lifted(const VarSetPtr& bigger) const;

    std::string to_string() const;

private:
    void push_den_factor(const Poly& f, int power);   // normalizes, folds scalars
    void reduce();

    Poly num_;
    std::map<Poly, int> den_;
};

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return f * c; }

} // namespace ybe
