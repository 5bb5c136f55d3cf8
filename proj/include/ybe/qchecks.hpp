#pragma once

#include "ybe/qtwist.hpp"
#include "ybe/solutions.hpp"

namespace ybe {

// F12 (Delta x id)(F) - F23 (id x Delta)(F) in the triple tensor representation
MatRF cocycle_residual(const Twist& f, const QRep& rep, const std::vector<Leg>& legs);

// counit normalization: both partial counits of the twist must give 1
bool twist_counit_is_one(const Twist& f, const QRep& rep);

// R12 R13 R23 - R23 R13 R12 with per-pair spectral variables supplied by the
// builder (legs a,b -> matrix on C^N (x) C^N)
using RBuilder = std::function<MatRF(const Leg&, const Leg&)>;
MatRF qybe_residual(const RBuilder& r, const QRep& rep, const std::vector<Leg>& legs);

// twisted R-matrix F^{21} R F^{-1} and its QYBE residual
struct TwistedR {
    MatRF r_twisted;
    bool qybe_zero;
};
TwistedR twist_and_qybe(const Twist& f, const RBuilder& r, const QRep& rep,
                        const std::vector<Leg>& legs);

// Hecke property of the constant R: (PR - q)(PR + q^-1) = 0
bool hecke_property(const MatRF& r_const, const QRep& rep);

// intertwining with the affine generator coproduct, pins the evaluation R
bool affine_intertwining(const MatRF& r, const QRep& rep, const Leg& a, const Leg& b);

// Semiclassical comparison: expand R (entries over the q-variable) at
// q = 1 - h/2, extract the order-h coefficient and compare against the
// solution tensor with (u,v) read as (za,zb).  The residual must be a
// rational-function multiple of the identity; returns that scalar.
struct SemiclassicalReport {
    bool defined = false;        // order-0 part was the identity
    bool scalar = false;         // residual is scalar * Id
    RatFunc scalar_value;
};
// flip_legs exchanges the tensor legs before extraction, matching the
// chirality of the standard catalogue entries
SemiclassicalReport semiclassical_limit(const MatRF& r, const QRep& rep, const Solution& target,
                                        const std::string& za, const std::string& zb,
                                        bool flip_legs = true);

// printed sl2 R-matrices on evaluation legs
MatRF r_e32(const QRep& rep, const std::string& za, const std::string& zb);
MatRF r_e34(const QRep& rep, const std::string& za, const std::string& zb,
            const RatFunc& a_param, const RatFunc& b_param);

} // namespace ybe
