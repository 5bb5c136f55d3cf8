#pragma once

#include "ybe/solutions.hpp"

namespace ybe {

// Element of g((u^-1)) ⊕ g with finite Laurent support. Coefficients may carry
// symbolic parameters but never the loop variable itself.
class LoopElt {
public:
    LoopElt() = default;
    LoopElt(Algebra a, VarSetPtr vars) : alg_(a), vars_(std::move(vars)) {}

    const Algebra& algebra() const { return alg_; }
    const VarSetPtr& vars() const { return vars_; }

    void add_loop(int i, int j, int deg, const RatFunc& c);
    void add_const(int i, int j, const RatFunc& c);

    const std::map<std::tuple<int, int, int>, RatFunc>& loop_part() const { return lau_; }
    const std::map<std::pair<int, int>, RatFunc>& const_part() const { return fin_; }

    bool is_zero() const { return lau_.empty() && fin_.empty(); }

    LoopElt operator+(const LoopElt& o) const;
    LoopElt operator*(const RatFunc& c) const;

    std::string to_string() const;

private:
    Algebra alg_;
    VarSetPtr vars_;
    std::map<std::tuple<int, int, int>, RatFunc> lau_;
    std::map<std::pair<int, int>, RatFunc> fin_;
};

LoopElt loop_bracket(const LoopElt& x, const LoopElt& y);

// invariant form: free term of tr(f g) minus tr(a b)
RatFunc loop_form(const LoopElt& x, const LoopElt& y);

struct OracleReport {
    bool pass = false;
    std::string witness;   // offending pair/triple when failing
};

// The Lagrangian-subalgebra test: build F from the solution's polynomial part
// relative to the standard r-matrix, map the half-loop basis through w + F(w),
// and check isotropy and bracket closure against the invariant form on all
// basis elements of degree >= -cutoff. Passes exactly when the CYBE holds.
OracleReport subalgebra_oracle(const Solution& X, int cutoff);

} // namespace ybe
