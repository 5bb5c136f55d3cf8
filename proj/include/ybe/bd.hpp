#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/lie.hpp"
#include "ybe/matrix.hpp"

namespace ybe {

// Belavin-Drinfeld triple on the A_rank diagram: two subsets of simple-root
// indices (1-based) and a bijection tau between them
struct BDTriple {
    int rank = 1;
    std::vector<int> gamma1, gamma2;
    std::vector<std::pair<int, int>> tau;   // pairs (from, to)

    int tau_of(int a) const;
    bool operator==(const BDTriple& o) const;
};

// isometry (adjacency preservation) and nilpotency of tau
bool bd_admissible(const BDTriple& t);

// complete duplicate-free enumeration; guard rank <= 8
std::vector<BDTriple> enumerate_bd(int rank);
// independent brute-force oracle used by the tests
std::vector<BDTriple> enumerate_bd_bruteforce(int rank);

// involution theta_S for S = all simple roots except alpha_k (A-type chains
// flip within each connected component); returns the image index per root
std::vector<int> theta_s(int rank, int deleted);

// classification of a triple with respect to a deleted multiplicity-free root
struct SAdmissible {
    enum Case { I, II } kind = I;
    BDTriple triple;        // (gamma1, gamma2, A~')
    int alpha = 1;          // deleted root index
    int beta = 0;           // case II: the root with A~'(beta) = alpha
};
std::optional<SAdmissible> s_admissible_classify(const BDTriple& t, int alpha,
                                                 std::string* reason = nullptr);

// Cartan tensors as rational coefficient matrices c[a][b] of e_aa (x) e_bb
using CartanCoeffs = std::vector<std::vector<Rational>>;

struct CartanSolutionSet {
    CartanCoeffs particular;
    std::vector<CartanCoeffs> kernel;
    bool contains(const CartanCoeffs& c, const VarSetPtr& vars) const;
};

// solve r + r21 = Omega0, (alpha x 1 + 1 x alpha) r = h_alpha and
// (tau(alpha) x 1 + 1 x alpha) r = 0 over gl or sl
CartanSolutionSet solve_cartan_bd(const BDTriple& t, Algebra alg);

// solve the constrained system attached to an S-admissible triple
CartanSolutionSet solve_cartan_quasitrig(const SAdmissible& t, Algebra alg);

// closed form of the Cremmer-Gervais Cartan tensor for gl_N
CartanCoeffs cg_cartan_closed_form(int N);

// identity report for the closed form (weight pairings and diagram data)
struct CgIdentityReport {
    bool weights_ok = false;       // single-weight pairing identities
    bool pair_diffs_ok = false;    // two-weight difference identities
    bool bd_conditions_ok = false; // diagram conditions of the shifted triple
    bool all_ok() const { return weights_ok && pair_diffs_ok && bd_conditions_ok; }
};
CgIdentityReport verify_cg_identities(int N);

} // namespace ybe
