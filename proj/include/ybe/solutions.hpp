#pragma once

#include <map>
#include <string>
#include <vector>

#include "ybe/lie.hpp"

namespace ybe {

// A catalogued CYBE candidate X(u,v) = pole_numerator/(u-v) + poly_part.
// Rational entries have pole numerator Omega; quasi-trigonometric ones v*Omega.
struct Solution {
    enum Kind { rational, quasi_trigonometric };

    Algebra alg;
    Kind kind = quasi_trigonometric;
    std::string id;
    std::map<std::string, RatFunc> params;
    VarSetPtr vars;
    Tensor2 pole_numerator;   // polynomial coefficients in (u,v)
    Tensor2 poly_part;        // polynomial coefficients in (u,v) and parameters

    // X(u,v) as a rational-function tensor
    Tensor2 full_tensor() const;
};

// registry used by every catalogued solution
VarSetPtr solution_vars();

// standard non-skewsymmetric r-matrix: sum_{i<j} e_ij (x) e_ji + Omega_0/2
Tensor2 standard_r0(Algebra a, const VarSetPtr& vars);

// ids: sl2.X0 sl2.X1 sl2.rat.R1 sl2.rat.R2 sl2.Xab sl3.X0 sl3.X1 sl3.X2
//      sl3.X3 sl3.Y2 sl3.Y3 slN.DJ rat.sl3.long rat.sl3.short
// Parameters: sl2.Xab needs a,b; rat.sl3.* need xi; slN.DJ accepts N.
Solution catalog_get(const std::string& id, const std::map<std::string, RatFunc>& params = {});

// every catalog id, with symbolic parameters where required (slN.DJ at N=4)
std::vector<std::string> catalog_ids();
Solution catalog_get_symbolic(const std::string& id);

} // namespace ybe
