#pragma once

#include <optional>
#include <vector>

#include "ybe/ratfunc.hpp"

namespace ybe {

// Dense matrix over the rational-function field. Entries default to exact
// zeros; products skip zero factors, which is what keeps the big but sparse
// R-matrix computations affordable.
class MatRF {
public:
    MatRF() = default;
    MatRF(int rows, int cols, VarSetPtr vars);

    static MatRF identity(int n, const VarSetPtr& vars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VarSetPtr& vars() const { return vars_; }

    const RatFunc& at(int r, int c) const { return data_[r * cols_ + c]; }
    RatFunc& at(int r, int c) { return data_[r * cols_ + c]; }

    MatRF operator+(const MatRF& o) const;
    MatRF operator-(const MatRF& o) const;
    MatRF operator*(const MatRF& o) const;
    MatRF operator*(const RatFunc& c) const;
    MatRF operator*(const Rational& c) const;
    bool operator==(const MatRF& o) const;
    bool is_zero() const;
    bool is_identity() const;

    MatRF transpose() const;
    MatRF kron(const MatRF& o) const;
    MatRF subst(const std::map<std::string, RatFunc>& bindings, const VarSetPtr& target) const;
    MatRF lifted(const VarSetPtr& bigger) const;

    // fraction-free Bareiss elimination after clearing denominators; throws on
    // a singular matrix
    MatRF inverse() const;

    bool is_nilpotent() const;          // some power up to dim vanishes

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    VarSetPtr vars_;
    std::vector<RatFunc> data_;
};

// multi-leg helpers for matrices acting on (C^N)^(⊗k)
MatRF place_on_legs(const MatRF& m2, int legs_total, int leg_a, int leg_b, int N);
MatRF place_on_leg(const MatRF& m1, int legs_total, int leg, int N);
MatRF permutation_matrix(int N, const VarSetPtr& vars);   // swap of C^N ⊗ C^N
MatRF partial_trace_first(const MatRF& m, int N, int rest_dim);

// Solve A x = b over the rational-function field by Gauss-Jordan.
// Returns a particular solution and a basis of the kernel, or nullopt when
// inconsistent.
struct LinearSolution {
    std::vector<RatFunc> particular;
    std::vector<std::vector<RatFunc>> kernel;
};
std::optional<LinearSolution> solve_linear(const MatRF& A, const std::vector<RatFunc>& b);

// exact rank of a list of row vectors over Q(params)
int rank_of_rows(const std::vector<std::vector<RatFunc>>& rows, const VarSetPtr& vars);

} // namespace ybe
