#pragma once

#include "ybe/solutions.hpp"

namespace ybe {

// registry for three-point residuals
VarSetPtr residual_vars();

// X placed on the given legs of the triple tensor, coefficients moved to
// (u1,u2,u3) by the slot's variable renaming
Tensor2 solution_on_legs(const Solution& X, int slot);

// [X12,X13] + [X12,X23] + [X13,X23] over the three-point registry
Tensor3 cybe_residual(const Solution& X);

// X(u,v) + X^{21}(v,u)
Tensor2 unitarity_residual(const Solution& X);

bool quasi_constant_test(const Solution& X);

// gauge maps: compositions of conjugation by a polynomial matrix with
// polynomial inverse witness, and the outer automorphism x -> -x^t
struct GaugeMap {
    struct Atom {
        bool neg_transpose = false;
        // conjugation data when !neg_transpose; entries are polynomials in u
        std::vector<std::vector<Poly>> mat, inv;
    };
    std::vector<Atom> atoms;   // applied left to right

    static GaugeMap identity();
    static GaugeMap negative_transpose();
    static GaugeMap conjugation(std::vector<std::vector<Poly>> mat,
                                std::vector<std::vector<Poly>> inv);
    GaugeMap then(const GaugeMap& next) const;
};

// (sigma(u) x sigma(v)) X; preserves the kind and the pole structure, throws
// when the inverse witness fails or the result is not of the declared shape
Solution gauge_transform(const Solution& X, const GaugeMap& g);

} // namespace ybe
