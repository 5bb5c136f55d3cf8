#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ybe/rational.hpp"
#include "ybe/varset.hpp"

namespace ybe {

// Exponent vector, fixed arity = registry size.
using Mono = std::vector<int>;

// Sparse multivariate polynomial over Q. No zero coefficients are stored;
// terms are kept in lexicographic monomial order, which makes the string and
// JSON forms canonical.
class Poly {
public:
    Poly() = default;
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarSetPtr vars, const Rational& c);
    static Poly variable(VarSetPtr vars, const std::string& name, int exp = 1);
    static Poly monomial(VarSetPtr vars, Mono m, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    const std::map<Mono, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // constant term (coefficient of the all-zero monomial)
    Rational constant_term() const;
    bool is_one() const;

    int total_degree() const;          // -1 for zero polynomial
    int degree_in(std::size_t var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // total order used by factored-denominator maps
    bool operator<(const Poly& o) const;

    Poly pow(int n) const;

    // substitute each listed variable by a polynomial over the same registry
    Poly subst(const std::map<std::size_t, Poly>& bindings) const;
    Poly derivative(std::size_t var) const;

    // exact division; nullopt when the division is not exact
    std::optional<Poly> divided_exactly_by(const Poly& d) const;

    // rational c and primitive p with *this == c*p, p integer coefficients,
    // gcd 1 and positive leading coefficient; zero gives (0, 0-poly)
    std::pair<Rational, Poly> content_normalized() const;

    // re-express over a superset registry (matching variables by name)
    Poly lifted(const VarSetPtr& bigger) const;

    void add_term(const Mono& m, const Rational& c);   // accumulates, drops zeros
    std::string to_string() const;

private:
    VarSetPtr vars_;
    std::map<Mono, Rational> terms_;
};

} // namespace ybe
