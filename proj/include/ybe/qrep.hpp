#pragma once

#include <memory>
#include <optional>

#include "ybe/matrix.hpp"

namespace ybe {

// Field setup for a quantum algebra computation. Cartan two-tensor exponents
// are rationals with denominators dividing 2N, so computations that need
// q^(m/2N) adjoin a root: q = qvar^qpow with qpow = 2N.
struct QContext {
    int N = 2;
    VarSetPtr vars;
    std::string qvar = "q";
    int qpow = 1;

    static QContext plain(int N, VarSetPtr vars, std::string qvar = "q");
    static QContext rooted(int N, VarSetPtr vars, std::string qvar = "qh");

    // q^e as an exact power of the base variable; throws when e*qpow is not
    // an integer
    RatFunc q_to(const Rational& e) const;
    RatFunc q() const { return q_to(1); }
};

// generator atoms of U_q(gl_N) and its polynomial current extension
struct Atom {
    enum Kind { ChevE, ChevF, Cartan, AffineE } kind = ChevE;
    int idx = 1;                        // i for e_{i,i+1} / e_{i+1,i}
    std::vector<Rational> cart_exps;    // q^{sum_i cart_exps[i] e_ii}

    static Atom E(int i) { return {ChevE, i, {}}; }
    static Atom F(int i) { return {ChevF, i, {}}; }
    static Atom cartan(std::vector<Rational> exps) { return {Cartan, 0, std::move(exps)}; }
    static Atom affine() { return {AffineE, 0, {}}; }
};

// expression over atoms: sums, products, scalar multiples, q-commutators
class GenExpr {
public:
    enum Kind { AtomK, Sum, Prod, Scale, QComm };

    static GenExpr atom(Atom a);
    static GenExpr sum(GenExpr a, GenExpr b);
    static GenExpr prod(GenExpr a, GenExpr b);
    static GenExpr scale(const RatFunc& c, GenExpr a);
    // [x,y]_{q^s} = x y - q^s y x
    static GenExpr qcomm(GenExpr x, GenExpr y, const Rational& s);

    Kind kind() const { return kind_; }
    const Atom& as_atom() const { return atom_; }
    const GenExpr& left() const { return *lhs_; }
    const GenExpr& right() const { return *rhs_; }
    const RatFunc& scalar() const { return scalar_; }
    const Rational& qexp() const { return qexp_; }

private:
    Kind kind_ = AtomK;
    Atom atom_;
    std::shared_ptr<const GenExpr> lhs_, rhs_;
    RatFunc scalar_;
    Rational qexp_;
};

// one tensor leg of a representation space
struct Leg {
    bool evaluation = false;   // carries an affine spectral variable
    std::string zvar;          // variable name when evaluation
};

// The vector / evaluation representation of U_q(gl_N) resp. U_q(gl_N[u]).
// Generator images are verified against the defining relations on
// construction.
class QRep {
public:
    QRep(QContext ctx, bool evaluation);

    const QContext& ctx() const { return ctx_; }
    bool evaluation() const { return eval_; }

    MatRF atom_image(const Atom& a, const std::string& zvar) const;

    // image of Delta^{k-1}(expr) on the given legs, one tensor factor per leg
    MatRF image(const GenExpr& e, const std::vector<Leg>& legs) const;

    // grouped image: legs partitioned into two ordered groups (S, T); the
    // expression is treated as living in two tensor slots and Delta is applied
    // within each group
    MatRF image_pair(const GenExpr& x, const GenExpr& y, const std::vector<Leg>& legs,
                     const std::vector<int>& S, const std::vector<int>& T) const;

private:
    void verify_relations() const;
    MatRF atom_group_image(const Atom& a, const std::vector<Leg>& legs,
                           const std::vector<int>& group, int total_legs) const;

    QContext ctx_;
    bool eval_;
};

// composite Cartan-Weyl root vectors, optionally in the primed basis twisted
// by the Cremmer-Gervais Cartan tensor
GenExpr cw_element(const QContext& ctx, int i, int j, bool primed);
GenExpr cw_element_primed_with(const QContext& ctx, int i, int j,
                               const std::vector<std::vector<Rational>>& r0exp);
// affine primed root vectors e'_{i1} built through the affine generator
GenExpr cw_affine_primed(const QContext& ctx, int i);
GenExpr cw_affine_primed_with(const QContext& ctx, int i,
                              const std::vector<std::vector<Rational>>& r0exp);

// Cartan part of the Cremmer-Gervais r-matrix for gl_N as exponent matrix:
// entry (a,b) is the coefficient of e_aa (x) e_bb
std::vector<std::vector<Rational>> cg_cartan_exponents(int N);

// relation check report used by tests and the acceptance suite
struct RelationReport {
    int checked = 0;
    int failed = 0;
    std::string first_failure;
    bool ok() const { return failed == 0; }
};

RelationReport verify_finite_relations(const QRep& rep);          // Chevalley relations
RelationReport verify_affine_relations(const QRep& rep);          // current-algebra extension
RelationReport verify_cw_relations(const QRep& rep);              // Cartan-Weyl permutations
RelationReport verify_cw_independence(const QRep& rep);           // choice of middle index
RelationReport verify_coproduct_properties(const QRep& rep);      // counit, multiplicativity

} // namespace ybe
