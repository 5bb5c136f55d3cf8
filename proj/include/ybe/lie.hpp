#pragma once

#include <array>
#include <functional>
#include <map>

#include "ybe/ratfunc.hpp"

namespace ybe {

struct Algebra {
    int N = 2;
    enum Kind { gl, sl } kind = sl;
    bool operator==(const Algebra& o) const { return N == o.N && kind == o.kind; }
};

// Element of g or g[u]: coefficients of matrix units e_ij, 1-based indices.
// Coefficients may involve the current variable and symbolic parameters.
class LieElement {
public:
    LieElement() = default;
    LieElement(Algebra a, VarSetPtr vars) : alg_(a), vars_(std::move(vars)) {}

    static LieElement unit(Algebra a, VarSetPtr vars, int i, int j, const RatFunc& c);
    static LieElement unit(Algebra a, VarSetPtr vars, int i, int j);

    const Algebra& algebra() const { return alg_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::map<std::pair<int, int>, RatFunc>& coeffs() const { return coeffs_; }

    void add(int i, int j, const RatFunc& c);
    RatFunc coeff(int i, int j) const;
    bool is_zero() const { return coeffs_.empty(); }

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const RatFunc& c) const;
    LieElement operator*(const Rational& c) const;
    bool operator==(const LieElement& o) const;

    std::string to_string() const;

private:
    Algebra alg_;
    VarSetPtr vars_;
    std::map<std::pair<int, int>, RatFunc> coeffs_;
};

LieElement bracket(const LieElement& x, const LieElement& y);
RatFunc trace_form(const LieElement& x, const LieElement& y);

// Element of g⊗g in the matrix-unit basis; sparse, no zero entries stored.
class Tensor2 {
public:
    using Key = std::array<int, 4>;   // (i,j,k,l) for e_ij ⊗ e_kl

    Tensor2() = default;
    Tensor2(Algebra a, VarSetPtr vars) : alg_(a), vars_(std::move(vars)) {}

    const Algebra& algebra() const { return alg_; }
    const VarSetPtr& vars() const { return vars_; }
    const std::map<Key, RatFunc>& entries() const { return entries_; }

    void add(int i, int j, int k, int l, const RatFunc& c);
    void add(const Key& k, const RatFunc& c);
    RatFunc entry(int i, int j, int k, int l) const;
    bool is_zero() const { return entries_.empty(); }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator*(const RatFunc& c) const;
    Tensor2 operator*(const Rational& c) const;
    bool operator==(const Tensor2& o) const;

    Tensor2 swapped_legs() const;                       // e_ij⊗e_kl -> e_kl⊗e_ij
    Tensor2 subst(const std::map<std::string, RatFunc>& bindings, const VarSetPtr& target) const;
    Tensor2 lifted(const VarSetPtr& bigger) const;
    Tensor2 map_units(const std::function<LieElement(int, int)>& phi) const;

    std::string to_string() const;

private:
    Algebra alg_;
    VarSetPtr vars_;
    std::map<Key, RatFunc> entries_;
};

class Tensor3 {
public:
    using Key = std::array<int, 6>;

    Tensor3() = default;
    Tensor3(Algebra a, VarSetPtr vars) : alg_(a), vars_(std::move(vars)) {}

    const Algebra& algebra() const { return alg_; }
    const std::map<Key, RatFunc>& entries() const { return entries_; }

    void add(const Key& k, const RatFunc& c);
    bool is_zero() const { return entries_.empty(); }

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    bool operator==(const Tensor3& o) const;

private:
    Algebra alg_;
    VarSetPtr vars_;
    std::map<Key, RatFunc> entries_;
};

// tensor of two elements, coefficientwise product
Tensor2 tensor(const LieElement& x, const LieElement& y);
Tensor2 wedge(const LieElement& x, const LieElement& y);   // x⊗y - y⊗x

// dual-basis Casimir of the trace form tr(xy)
Tensor2 casimir(Algebra a, VarSetPtr vars);
Tensor2 cartan_part(const Tensor2& t);

// Leibniz action [x⊗1+1⊗x, t] (and the three-leg analogue)
Tensor2 ad_tensor(const LieElement& x, const Tensor2& t);
Tensor3 ad_tensor(const LieElement& x, const Tensor3& t);

// place t on two legs of a triple tensor, identity on the remaining leg;
// slot is 12, 13 or 23. Coefficients must already live over the target vars.
Tensor3 embed(const Tensor2& t, int slot);

// commutator [A^P, B^Q] of two leg-placements sharing exactly one leg
Tensor3 bracket_embedded(const Tensor2& A, int slotA, const Tensor2& B, int slotB);

// A-type root data for sl(N)/gl(N)
struct RootDatum {
    Algebra alg;
    // simple roots alpha_i = eps_i - eps_{i+1}, i = 1..N-1, as eps-coordinates
    std::vector<std::vector<int>> simple_roots;
    std::vector<std::pair<int, int>> positive_roots;   // (i,j), i<j for eps_i-eps_j
    std::vector<int> max_root_coeffs;                  // all 1 in A-type
    std::vector<bool> multiplicity_free;               // all true in A-type

    static RootDatum make(Algebra a);
};

} // namespace ybe
