#pragma once

#include "ybe/bd.hpp"

namespace ybe {

// Cartan-level reconstruction of the Lagrangian data attached to an
// S-admissible triple and a solved Cartan tensor: the endomorphism R of the
// Cartan subalgebra, the graph subspace f' ⊕ i_a' and the Lagrangian piece
// i_a' of a', with the transversality certificate against Delta_S.
struct LagrangianCartanData {
    std::vector<std::vector<Rational>> endo_r;          // R in eps-coordinates
    std::vector<std::vector<Rational>> graph_basis;     // rows span f'+i_a' in h x h
    std::vector<std::vector<Rational>> ia_basis;        // rows span i_a'
    bool pairing_identity = false;    // A R + R* A = id on the traceless space
    bool normalization = false;       // R maps the prescribed vectors to H_gamma
    bool transversal = false;         // (f'+i_a') ∩ Delta_S = 0
    bool lagrangian = false;          // i_a' isotropic of half dimension in a'
    bool ok() const { return pairing_identity && normalization && transversal && lagrangian; }
};

LagrangianCartanData reconstruct_ia_prime(const SAdmissible& t, const CartanCoeffs& r_tensor,
                                          Algebra alg);

} // namespace ybe
