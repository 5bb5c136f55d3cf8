#include "ybe/qrep.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace ybe {

QContext QContext::plain(int N, VarSetPtr vars, std::string qvar) {
    QContext c;
    c.N = N;
    c.vars = std::move(vars);
    c.qvar = std::move(qvar);
    c.qpow = 1;
    return c;
}

QContext QContext::rooted(int N, VarSetPtr vars, std::string qvar) {
    QContext c;
    c.N = N;
    c.vars = std::move(vars);
    c.qvar = std::move(qvar);
    c.qpow = 2 * N;
    return c;
}

RatFunc QContext::q_to(const Rational& e) const {
    Rational scaled = e * qpow;
    if (denominator(scaled) != 1)
        throw std::domain_error("q-power " + rat_to_string(e) + " not integral at root index " +
                                std::to_string(qpow));
    long n = static_cast<long>(numerator(scaled));
    return RatFunc::variable(vars, qvar, static_cast<int>(n));
}

GenExpr GenExpr::atom(Atom a) {
    GenExpr e;
    e.kind_ = AtomK;
    e.atom_ = std::move(a);
    return e;
}

GenExpr GenExpr::sum(GenExpr a, GenExpr b) {
    GenExpr e;
    e.kind_ = Sum;
    e.lhs_ = std::make_shared<GenExpr>(std::move(a));
    e.rhs_ = std::make_shared<GenExpr>(std::move(b));
    return e;
}

GenExpr GenExpr::prod(GenExpr a, GenExpr b) {
    GenExpr e;
    e.kind_ = Prod;
    e.lhs_ = std::make_shared<GenExpr>(std::move(a));
    e.rhs_ = std::make_shared<GenExpr>(std::move(b));
    return e;
}

GenExpr GenExpr::scale(const RatFunc& c, GenExpr a) {
    GenExpr e;
    e.kind_ = Scale;
    e.scalar_ = c;
    e.lhs_ = std::make_shared<GenExpr>(std::move(a));
    return e;
}

GenExpr GenExpr::qcomm(GenExpr x, GenExpr y, const Rational& s) {
    GenExpr e;
    e.kind_ = QComm;
    e.lhs_ = std::make_shared<GenExpr>(std::move(x));
    e.rhs_ = std::make_shared<GenExpr>(std::move(y));
    e.qexp_ = s;
    return e;
}

QRep::QRep(QContext ctx, bool evaluation) : ctx_(std::move(ctx)), eval_(evaluation) {
    verify_relations();
}

MatRF QRep::atom_image(const Atom& a, const std::string& zvar) const {
    const int N = ctx_.N;
    MatRF m(N, N, ctx_.vars);
    switch (a.kind) {
        case Atom::ChevE:
            m.at(a.idx - 1, a.idx) = RatFunc::one(ctx_.vars);
            break;
        case Atom::ChevF:
            m.at(a.idx, a.idx - 1) = RatFunc::one(ctx_.vars);
            break;
        case Atom::Cartan:
            for (int i = 0; i < N; ++i) m.at(i, i) = ctx_.q_to(a.cart_exps.at(i));
            break;
        case Atom::AffineE:
            if (!eval_) throw std::invalid_argument("affine generator outside evaluation rep");
            m.at(N - 1, 0) = RatFunc::variable(ctx_.vars, zvar);
            break;
    }
    return m;
}

namespace {

// grouplike companions of the skew-primitive generators
std::vector<Rational> left_cartan_of(const Atom& a, int N) {
    std::vector<Rational> e(N, 0);
    switch (a.kind) {
        case Atom::ChevE:
            e[a.idx] = 1;       // q^{e_{i+1,i+1} - e_ii}
            e[a.idx - 1] = -1;
            break;
        case Atom::AffineE:
            e[0] = 1;           // q^{e_11 - e_NN}
            e[N - 1] = -1;
            break;
        default:
            break;
    }
    return e;
}

std::vector<Rational> right_cartan_of(const Atom& a, int N) {
    std::vector<Rational> e(N, 0);
    if (a.kind == Atom::ChevF) {
        e[a.idx - 1] = 1;       // q^{e_ii - e_{i+1,i+1}}
        e[a.idx] = -1;
    }
    return e;
}

} // namespace

MatRF QRep::atom_group_image(const Atom& a, const std::vector<Leg>& legs,
                             const std::vector<int>& group, int total_legs) const {
    const int N = ctx_.N;
    int dim = 1;
    for (int i = 0; i < total_legs; ++i) dim *= N;
    MatRF out(dim, dim, ctx_.vars);

    if (a.kind == Atom::Cartan) {
        MatRF acc = MatRF::identity(dim, ctx_.vars);
        for (int leg : group) {
            MatRF d = atom_image(a, "");
            acc = acc * place_on_leg(d, total_legs, leg, N);
        }
        return acc;
    }
    // skew-primitive: sum over the member leg carrying the generator
    auto gl = left_cartan_of(a, N);
    auto gr = right_cartan_of(a, N);
    bool has_l = a.kind == Atom::ChevE || a.kind == Atom::AffineE;
    for (std::size_t m = 0; m < group.size(); ++m) {
        MatRF term = place_on_leg(atom_image(a, legs[group[m]].zvar), total_legs, group[m], N);
        for (std::size_t p = 0; p < group.size(); ++p) {
            if (p == m) continue;
            const std::vector<Rational>& g = (p < m) ? gl : gr;
            bool is_identity = (p < m) ? !has_l : has_l;
            if (is_identity) continue;
            term = term * place_on_leg(atom_image(Atom::cartan(g), ""), total_legs, group[p], N);
        }
        out = out + term;
    }
    return out;
}

MatRF QRep::image(const GenExpr& e, const std::vector<Leg>& legs) const {
    std::vector<int> all(legs.size());
    for (std::size_t i = 0; i < legs.size(); ++i) all[i] = static_cast<int>(i);
    const int N = ctx_.N;
    int dim = 1;
    for (std::size_t i = 0; i < legs.size(); ++i) dim *= N;

    switch (e.kind()) {
        case GenExpr::AtomK:
            return atom_group_image(e.as_atom(), legs, all, static_cast<int>(legs.size()));
        case GenExpr::Sum:
            return image(e.left(), legs) + image(e.right(), legs);
        case GenExpr::Prod:
            return image(e.left(), legs) * image(e.right(), legs);
        case GenExpr::Scale:
            return image(e.left(), legs) * e.scalar();
        case GenExpr::QComm: {
            MatRF x = image(e.left(), legs);
            MatRF y = image(e.right(), legs);
            return x * y - y * x * ctx_.q_to(e.qexp());
        }
    }
    throw std::logic_error("unreachable");
}

MatRF QRep::image_pair(const GenExpr& x, const GenExpr& y, const std::vector<Leg>& legs,
                       const std::vector<int>& S, const std::vector<int>& T) const {
    // evaluate x on group S and y on group T, identity elsewhere
    std::function<MatRF(const GenExpr&, const std::vector<int>&)> go =
        [&](const GenExpr& e, const std::vector<int>& group) -> MatRF {
        switch (e.kind()) {
            case GenExpr::AtomK:
                return atom_group_image(e.as_atom(), legs, group, static_cast<int>(legs.size()));
            case GenExpr::Sum:
                return go(e.left(), group) + go(e.right(), group);
            case GenExpr::Prod:
                return go(e.left(), group) * go(e.right(), group);
            case GenExpr::Scale:
                return go(e.left(), group) * e.scalar();
            case GenExpr::QComm: {
                MatRF a = go(e.left(), group);
                MatRF b = go(e.right(), group);
                return a * b - b * a * ctx_.q_to(e.qexp());
            }
        }
        throw std::logic_error("unreachable");
    };
    return go(x, S) * go(y, T);
}

GenExpr cw_element(const QContext& ctx, int i, int j, bool primed) {
    if (i == j || i < 1 || j < 1 || i > ctx.N || j > ctx.N)
        throw std::invalid_argument("root vector indices out of range");
    GenExpr base = [&] {
        if (i < j) {
            if (j == i + 1) return GenExpr::atom(Atom::E(i));
            // e_ij = [e_{i,i+1}, e_{i+1,j}]_{q^-1}
            return GenExpr::qcomm(GenExpr::atom(Atom::E(i)), cw_element(ctx, i + 1, j, false),
                                  Rational(-1));
        }
        if (i == j + 1) return GenExpr::atom(Atom::F(j));
        // e_ji lowering: e_{ij} = [e_{i,i+1-ish}...]; here i > j:
        // e_{ij} = [e_{i,j+1}, e_{j+1,j}]_q
        return GenExpr::qcomm(cw_element(ctx, i, j + 1, false), GenExpr::atom(Atom::F(j)),
                              Rational(1));
    }();
    if (!primed) return base;
    return cw_element_primed_with(ctx, i, j, cg_cartan_exponents(ctx.N));
}

GenExpr cw_element_primed_with(const QContext& ctx, int i, int j,
                               const std::vector<std::vector<Rational>>& r0) {
    GenExpr base = cw_element(ctx, i, j, false);
    std::vector<Rational> exps(ctx.N, 0);
    if (i < j) {
        // e'_ij = e_ij q^{((eps_i - eps_j) x id)(r0)}
        for (int a = 0; a < ctx.N; ++a) exps[a] = r0[i - 1][a] - r0[j - 1][a];
        return GenExpr::prod(base, GenExpr::atom(Atom::cartan(exps)));
    }
    // e'_ij (i > j): q^{(id x (eps_i - eps_j))(r0)} e_ij
    for (int a = 0; a < ctx.N; ++a) exps[a] = r0[a][i - 1] - r0[a][j - 1];
    return GenExpr::prod(GenExpr::atom(Atom::cartan(exps)), base);
}

GenExpr cw_affine_primed(const QContext& ctx, int i) {
    return cw_affine_primed_with(ctx, i, cg_cartan_exponents(ctx.N));
}

GenExpr cw_affine_primed_with(const QContext& ctx, int i,
                              const std::vector<std::vector<Rational>>& r0) {
    const int N = ctx.N;
    GenExpr raw = [&] {
        if (i == N) return GenExpr::atom(Atom::affine());
        // e^{(1)}_{i1} = [e^{(0)}_{iN}, e^{(1)}_{N1}]_{q^-1}
        return GenExpr::qcomm(cw_element(ctx, i, N, false), GenExpr::atom(Atom::affine()),
                              Rational(-1));
    }();
    std::vector<Rational> exps(N, 0);
    for (int a = 0; a < N; ++a) exps[a] = r0[i - 1][a] - r0[0][a];
    return GenExpr::prod(raw, GenExpr::atom(Atom::cartan(exps)));
}

std::vector<std::vector<Rational>> cg_cartan_exponents(int N) {
    std::vector<std::vector<Rational>> c(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < N; ++i) c[i][i] = Rational(1, 2);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Rational w(N + 2 * (i - j), 2 * N);
            c[i][j] += w;
            c[j][i] -= w;
        }
    return c;
}

namespace {

struct Checker {
    const QRep& rep;
    std::vector<Leg> legs;
    RelationReport rep_out;

    void expect_zero(const MatRF& m, const std::string& what) {
        ++rep_out.checked;
        if (!m.is_zero()) {
            ++rep_out.failed;
            if (rep_out.first_failure.empty()) rep_out.first_failure = what;
        }
    }
};

std::vector<Rational> unit_exps(int N, int i, Rational v) {
    std::vector<Rational> e(N, 0);
    e[i - 1] = v;
    return e;
}

} // namespace

void QRep::verify_relations() const {
    auto fin = verify_finite_relations(*this);
    if (!fin.ok())
        throw std::logic_error("generator images violate a defining relation: " +
                               fin.first_failure);
    if (eval_) {
        auto aff = verify_affine_relations(*this);
        if (!aff.ok())
            throw std::logic_error("affine generator violates a defining relation: " +
                                   aff.first_failure);
    }
}

RelationReport verify_finite_relations(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    Checker ck{rep, {Leg{rep.evaluation(), "z1"}}, {}};
    auto im = [&](const GenExpr& e) { return rep.image(e, ck.legs); };
    auto E = [&](int i) { return GenExpr::atom(Atom::E(i)); };
    auto F = [&](int i) { return GenExpr::atom(Atom::F(i)); };
    auto K = [&](int i, Rational v) { return GenExpr::atom(Atom::cartan(unit_exps(N, i, v))); };
    MatRF id = MatRF::identity(N, ctx.vars);

    for (int i = 1; i <= N; ++i) {
        ck.expect_zero(im(K(i, 1)) * im(K(i, -1)) - id, "q^e q^-e = 1 at i=" + std::to_string(i));
        for (int j = 1; j <= N; ++j)
            ck.expect_zero(im(K(i, 1)) * im(K(j, 1)) - im(K(j, 1)) * im(K(i, 1)),
                           "cartan commutativity");
    }
    // q^{e_ii} e_jk q^{-e_ii} = q^{d_ij - d_ik} e_jk for |j-k| = 1
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j < N; ++j) {
            RatFunc we = ctx.q_to(Rational((i == j) - (i == j + 1)));
            RatFunc wf = ctx.q_to(Rational((i == j + 1) - (i == j)));
            ck.expect_zero(im(K(i, 1)) * im(E(j)) * im(K(i, -1)) - im(E(j)) * we,
                           "cartan weight on raising generator");
            ck.expect_zero(im(K(i, 1)) * im(F(j)) * im(K(i, -1)) - im(F(j)) * wf,
                           "cartan weight on lowering generator");
        }
    // [e_i, f_j] = d_ij (q^{h_i} - q^{-h_i})/(q - q^-1)
    RatFunc q = ctx.q_to(1);
    RatFunc qden = q - q.inverse();
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            MatRF lhs = im(E(i)) * im(F(j)) - im(F(j)) * im(E(i));
            if (i == j) {
                std::vector<Rational> h(N, 0);
                h[i - 1] = 1;
                h[i] = -1;
                MatRF pos = rep.atom_image(Atom::cartan(h), "");
                std::vector<Rational> hn(N, 0);
                hn[i - 1] = -1;
                hn[i] = 1;
                MatRF neg = rep.atom_image(Atom::cartan(hn), "");
                ck.expect_zero(lhs - (pos - neg) * qden.inverse(), "chevalley pairing");
            } else {
                ck.expect_zero(lhs, "mixed chevalley commutator");
            }
        }
    // far-apart commutation and q-Serre
    for (int i = 1; i < N; ++i)
        for (int j = 1; j < N; ++j) {
            if (std::abs(i - j) >= 2) {
                ck.expect_zero(im(E(i)) * im(E(j)) - im(E(j)) * im(E(i)), "distant raising");
                ck.expect_zero(im(F(i)) * im(F(j)) - im(F(j)) * im(F(i)), "distant lowering");
            }
            if (std::abs(i - j) == 1) {
                GenExpr inner = GenExpr::qcomm(E(i), E(j), Rational(-1));
                GenExpr serre = GenExpr::qcomm(inner, E(j), Rational(1));
                ck.expect_zero(im(serre), "raising q-Serre");
                GenExpr innerf = GenExpr::qcomm(F(i), F(j), Rational(-1));
                GenExpr serref = GenExpr::qcomm(innerf, F(j), Rational(1));
                ck.expect_zero(im(serref), "lowering q-Serre");
            }
        }
    return ck.rep_out;
}

RelationReport verify_affine_relations(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    Checker ck{rep, {Leg{true, "z1"}}, {}};
    auto im = [&](const GenExpr& e) { return rep.image(e, ck.legs); };
    auto E = [&](int i) { return GenExpr::atom(Atom::E(i)); };
    auto F = [&](int i) { return GenExpr::atom(Atom::F(i)); };
    GenExpr A = GenExpr::atom(Atom::affine());

    // q^{e_ii} weights
    for (int i = 1; i <= N; ++i) {
        GenExpr K = GenExpr::atom(Atom::cartan(unit_exps(N, i, 1)));
        RatFunc w = ctx.q_to(Rational(-((i == 1) - (i == N))));
        ck.expect_zero(im(K) * im(A) - im(A) * im(K) * w, "cartan weight on affine generator");
    }
    for (int i = 2; i <= N - 2; ++i)
        ck.expect_zero(im(E(i)) * im(A) - im(A) * im(E(i)), "affine vs inner raising");
    for (int i = 1; i < N; ++i)
        ck.expect_zero(im(F(i)) * im(A) - im(A) * im(F(i)), "affine vs lowering");
    // q-Serre relations between the affine generator and the boundary
    // Chevalley generators. For N >= 3 the roots pair to -1 and the relations
    // are quadratic; at N = 2 the pairing is -2 and they become cubic.
    if (N >= 3) {
        auto serre_pair = [&](const GenExpr& x) {
            GenExpr xa = GenExpr::qcomm(x, A, Rational(-1));
            ck.expect_zero(im(GenExpr::qcomm(x, xa, Rational(1))),
                           "affine q-Serre (chevalley twice)");
            ck.expect_zero(im(GenExpr::qcomm(xa, A, Rational(1))),
                           "affine q-Serre (affine twice)");
        };
        serre_pair(E(1));
        serre_pair(E(N - 1));
    } else {
        GenExpr x = E(1);
        GenExpr t1 = GenExpr::qcomm(x, A, Rational(-2));
        GenExpr t2 = GenExpr::qcomm(x, t1, Rational(0));
        ck.expect_zero(im(GenExpr::qcomm(x, t2, Rational(2))), "affine cubic Serre (chevalley)");
        GenExpr s1 = GenExpr::qcomm(A, x, Rational(-2));
        GenExpr s2 = GenExpr::qcomm(A, s1, Rational(0));
        ck.expect_zero(im(GenExpr::qcomm(A, s2, Rational(2))), "affine cubic Serre (affine)");
    }
    return ck.rep_out;
}

RelationReport verify_cw_relations(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    Checker ck{rep, {Leg{rep.evaluation(), "z1"}}, {}};
    auto im = [&](const GenExpr& e) { return rep.image(e, ck.legs); };
    RatFunc q = ctx.q_to(1);
    RatFunc qi = q.inverse();
    auto cw = [&](int i, int j) { return im(cw_element(ctx, i, j, false)); };
    auto qpow = [&](int i, int j) {
        // q^{e_ii - e_jj} as a diagonal image
        std::vector<Rational> h(N, 0);
        h[i - 1] += 1;
        h[j - 1] -= 1;
        return rep.atom_image(Atom::cartan(h), "");
    };
    auto zero = [&](const MatRF& m, const char* w) { ck.expect_zero(m, w); };

    // weights under the q-Cartan generators
    for (int k = 1; k <= N; ++k)
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                if (i == j) continue;
                MatRF K = rep.atom_image(Atom::cartan(unit_exps(N, k, 1)), "");
                MatRF Ki = rep.atom_image(Atom::cartan(unit_exps(N, k, -1)), "");
                RatFunc w = ctx.q_to(Rational((k == i) - (k == j)));
                zero(K * cw(i, j) * Ki - cw(i, j) * w, "cartan weight on root vector");
            }
    // opposite pairs
    for (int i = 1; i < N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            MatRF lhs = cw(i, j) * cw(j, i) - cw(j, i) * cw(i, j);
            MatRF rhs = (qpow(i, j) - qpow(j, i)) * (q - qi).inverse();
            zero(lhs - rhs, "pairing of opposite root vectors");
        }
    // ordered families among raising vectors, and the mixed ones
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    if (i < j && j <= k && k < l) {
                        MatRF expect = j == k ? cw(i, l) : MatRF(N, N, ctx.vars);
                        zero(cw(i, j) * cw(k, l) - cw(k, l) * cw(i, j) * qi - expect,
                             "raising splice");
                        zero(cw(k, l) * cw(j, i) - cw(j, i) * cw(k, l), "mixed disjoint");
                    }
                    if (i < j && j < k && k < l) {
                        zero(cw(i, k) * cw(j, l) - cw(j, l) * cw(i, k) * qi -
                                 cw(j, k) * cw(i, l) * (q - qi),
                             "raising interleave");
                        zero(cw(i, l) * cw(k, j) - cw(k, j) * cw(i, l), "mixed interleave");
                        zero(cw(j, l) * cw(k, i) - cw(k, i) * cw(j, l) -
                                 cw(k, l) * cw(j, i) * qpow(j, k) * (qi - q),
                             "mixed deep interleave");
                    }
                    if (i <= j && j < k && k <= l)
                        zero(cw(j, k) * cw(i, l) - cw(i, l) * cw(j, k) * qi, "raising enclose");
                    if (k == 1 && i < j && j < l)
                        zero(cw(j, i) * cw(i, l) - cw(i, l) * cw(j, i) - cw(j, l) * qpow(i, j),
                             "lower against raising through shared index");
                    if (j == 1 && i < k && k < l)
                        zero(cw(k, l) * cw(l, i) - cw(l, i) * cw(k, l) - cw(k, i) * qpow(k, l),
                             "shared-corner splice");
                }
    return ck.rep_out;
}

RelationReport verify_cw_independence(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    Checker ck{rep, {Leg{rep.evaluation(), "z1"}}, {}};
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (std::abs(i - j) < 2) continue;
            MatRF ref(0, 0, ctx.vars);
            bool first = true;
            int lo = std::min(i, j), hi = std::max(i, j);
            for (int k = lo + 1; k < hi; ++k) {
                GenExpr e = (i < j)
                    ? GenExpr::qcomm(cw_element(ctx, i, k, false), cw_element(ctx, k, j, false),
                                     Rational(-1))
                    : GenExpr::qcomm(cw_element(ctx, i, k, false), cw_element(ctx, k, j, false),
                                     Rational(1));
                MatRF m = rep.image(e, ck.legs);
                if (first) {
                    ref = m;
                    first = false;
                } else {
                    ck.expect_zero(m - ref, "middle-index dependence at " + std::to_string(i) +
                                                "," + std::to_string(j));
                }
            }
        }
    return ck.rep_out;
}

RelationReport verify_coproduct_properties(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    Checker ck{rep, {}, {}};
    std::vector<Leg> two{Leg{rep.evaluation(), "z1"}, Leg{rep.evaluation(), "z2"}};
    auto E1 = GenExpr::atom(Atom::E(1));
    auto F1 = GenExpr::atom(Atom::F(1));
    // multiplicativity on a product
    GenExpr pr = GenExpr::prod(E1, F1);
    ck.expect_zero(rep.image(pr, two) - rep.image(E1, two) * rep.image(F1, two),
                   "coproduct multiplicativity");
    // grouplike cartan
    GenExpr K = GenExpr::atom(Atom::cartan(unit_exps(N, 1, 1)));
    MatRF k1 = rep.atom_image(Atom::cartan(unit_exps(N, 1, 1)), "");
    ck.expect_zero(rep.image(K, two) - k1.kron(k1), "cartan is grouplike");
    // counit: evaluating the second leg with the one-dimensional trivial rep
    // corresponds to dropping the second tensor factor; check on generators
    // via the explicit coproducts: (id (x) eps) Delta(e_i) = e_i
    // Implemented structurally: the coproduct image with a single leg equals
    // the plain image.
    std::vector<Leg> one{Leg{rep.evaluation(), "z1"}};
    ck.expect_zero(rep.image(E1, one) - rep.atom_image(Atom::E(1), "z1"), "counit reduction");
    return ck.rep_out;
}

} // namespace ybe
