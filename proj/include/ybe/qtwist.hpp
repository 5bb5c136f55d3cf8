#pragma once

#include "ybe/qrep.hpp"

namespace ybe {

// q-exponential factor exp_{q^bexp}(coeff * x (x) y) of a structured twist
struct TwistFactor {
    Rational bexp;      // base exponent of the q-exponential
    RatFunc coeff;
    GenExpr x, y;
};

// Cartan two-tensor factor q^{sum c_ab e_aa (x) e_bb}
struct CartanTwist {
    std::vector<std::vector<Rational>> c;
};

// product of q-exponential factors followed by an optional Cartan factor
struct Twist {
    std::vector<TwistFactor> factors;
    std::optional<CartanTwist> cartan;
    bool cartan_first = false;   // inverse twists apply the Cartan factor first

    Twist inverse() const;
    Twist swapped() const;    // legs exchanged
};

// evaluations in tensor powers of the rep: the twist occupies the ordered leg
// groups (S, T) of a larger leg list, coproducts applied within each group
MatRF twist_image(const Twist& f, const QRep& rep, const std::vector<Leg>& legs,
                  const std::vector<int>& S, const std::vector<int>& T);
MatRF twist_matrix(const Twist& f, const QRep& rep, const Leg& a, const Leg& b);

// q-exponential of a nilpotent matrix
MatRF q_exp_nilpotent(const MatRF& m, const RatFunc& qbase);

// the standard Cartan twist exponents: diagonal pairing q^{sum_i e_ii (x) e_ii}
CartanTwist diagonal_pairing_twist(int N);
// Cremmer-Gervais Cartan twist q^{r0(N)}
CartanTwist cg_cartan_twist(int N);

// universal R-matrix of U_q(gl_N) in vector (x) vector: ordered product of
// root factors times the diagonal Cartan factor
MatRF universal_r_constant(const QRep& rep);
// trigonometric R-matrix on evaluation legs (za, zb), normalized to 1 on the
// same-index diagonal; reduces to the sl2 form printed in the source material
MatRF trigonometric_r_evaluation(const QRep& rep, const std::string& za, const std::string& zb);

// Cremmer-Gervais twist of U_q(gl_{N+1}) in vector (x) vector, and its affine
// realization twisting U_q(gl_N[u]) on evaluation legs
Twist cremmer_gervais_twist(const QContext& ctx_np1);
Twist affine_cremmer_gervais_twist(const QContext& ctx_n);
// index-shifted variant supported on the lower-right block; the Cartan
// exponents must solve the associated diagram system (no printed reference
// form exists; gated by the checks)
Twist cremmer_gervais_twist_shifted(const QContext& ctx_np1,
                                    const std::vector<std::vector<Rational>>& cartan_exps);
Twist affine_cremmer_gervais_twist_shifted(const QContext& ctx_n,
                                    const std::vector<std::vector<Rational>>& cartan_exps);

} // namespace ybe
