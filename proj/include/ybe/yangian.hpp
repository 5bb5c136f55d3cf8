#pragma once

#include "ybe/matrix.hpp"
#include "ybe/solutions.hpp"

namespace ybe {

// exp(D log(base)) for unipotent base and diagonal rational exponent D;
// the alternative right-multiplication order is provided because the power
// notation in the source formulas does not pin it down
MatRF operator_power(const MatRF& base, const MatRF& exponent, bool exponent_left = true);
MatRF mat_log_unipotent(const MatRF& m);
MatRF mat_exp_nilpotent(const MatRF& m);

// evaluation-representation products of the two printed rational twists of
// sl(3); entries are polynomial in the second-leg spectral variable and the
// deformation parameter
enum class YangianTwistId { long_twist, short_twist };
MatRF yangian_twist(YangianTwistId id, const VarSetPtr& vars, const std::string& uleg,
                    const std::string& zeta);

struct RationalTwistReport {
    MatRF r_twisted;
    bool qybe_zero = false;
    bool semiclassical_scalar = false;
    RatFunc semiclassical_value;
};

// F^{21} R F^{-1} for the Yang R-matrix, with the QYBE residual over the full
// symbolic field and the order-h comparison against the catalogued rational
// solution (zeta -> h zeta, Yang constant -> h)
RationalTwistReport twisted_rational_R(YangianTwistId id, const VarSetPtr& vars);

// the printed sl(2) rational R-matrix with parameters (eta, xi)
MatRF r_e41(const VarSetPtr& vars, const std::string& ua, const std::string& ub,
            const RatFunc& eta, const RatFunc& xi);

struct Sl2RationalReport {
    MatRF r;
    bool qybe_zero = false;
    bool semiclassical_scalar = false;
    RatFunc semiclassical_value;
};
Sl2RationalReport sl2_rational_check(const VarSetPtr& vars);

} // namespace ybe
