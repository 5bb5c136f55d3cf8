#include "ybe/yangian.hpp"

#include "ybe/cybe.hpp"
#include "ybe/series.hpp"

#include <stdexcept>

namespace ybe {

MatRF mat_log_unipotent(const MatRF& m) {
    const int n = m.rows();
    MatRF nil = m - MatRF::identity(n, m.vars());
    MatRF term = nil, acc(n, n, m.vars());
    int k = 1;
    while (!term.is_zero() && k <= n + 2) {
        acc = acc + term * Rational((k % 2 == 1) ? 1 : -1, k);
        term = term * nil;
        ++k;
    }
    if (!term.is_zero()) throw std::invalid_argument("operator power needs a unipotent base");
    return acc;
}

MatRF mat_exp_nilpotent(const MatRF& m) {
    const int n = m.rows();
    MatRF acc = MatRF::identity(n, m.vars()), term = acc;
    BigInt fact = 1;
    for (int k = 1; k <= n + 2; ++k) {
        term = term * m;
        if (term.is_zero()) break;
        fact *= k;
        acc = acc + term * Rational(BigInt(1), fact);
    }
    return acc;
}

MatRF operator_power(const MatRF& base, const MatRF& exponent, bool exponent_left) {
    MatRF lg = mat_log_unipotent(base);
    return mat_exp_nilpotent(exponent_left ? exponent * lg : lg * exponent);
}

namespace {

MatRF unit3(const VarSetPtr& vs, int i, int j) {
    MatRF m(3, 3, vs);
    m.at(i - 1, j - 1) = RatFunc::one(vs);
    return m;
}

} // namespace

MatRF yangian_twist(YangianTwistId id, const VarSetPtr& vs, const std::string& uleg,
                    const std::string& zeta_name) {
    RatFunc u = RatFunc::variable(vs, uleg);
    RatFunc zeta = RatFunc::variable(vs, zeta_name);
    auto E = [&](int i, int j) { return unit3(vs, i, j); };
    MatRF I3 = MatRF::identity(3, vs);
    MatRF I9 = MatRF::identity(9, vs);
    MatRF ha = E(1, 1) * Rational(1, 3) + E(2, 2) * Rational(1, 3) + E(3, 3) * Rational(-2, 3);
    MatRF hb = E(1, 1) * Rational(2, 3) + E(2, 2) * Rational(-1, 3) + E(3, 3) * Rational(-1, 3);
    MatRF h1223 = E(1, 1) - E(2, 2) * Rational(2) + E(3, 3);

    // second-leg images of the degeneration generators
    MatRF f0 = E(3, 1), f1 = E(3, 1) * u, f2 = E(3, 2), f3 = E(3, 2) * u;
    MatRF g0 = E(3, 1), g1 = E(3, 1) * u, g2 = E(2, 1);

    if (id == YangianTwistId::short_twist) {
        MatRF base1 = I9 + I3.kron(g1 + E(3, 2)) * zeta - ha.kron(g0) * (zeta * zeta);
        MatRF fac1 = operator_power(base1, (ha * Rational(-1)).kron(I3));
        MatRF base2 = I9 - I3.kron(g2) * zeta;
        MatRF fac2 = operator_power(base2, (h1223 * Rational(-1, 3)).kron(I3));
        return fac1 * fac2;
    }
    MatRF fac1 = operator_power(I9 - I3.kron(f3) * zeta - hb.kron(f2) * (zeta * zeta),
                                (hb * Rational(-1)).kron(I3));
    MatRF fac2 = operator_power(I9 + I3.kron(E(2, 1)) * zeta, (hb * Rational(-1)).kron(I3));
    // the printed first-leg product annihilates in the vector representation;
    // the factor is kept for structural completeness
    MatRF fac3 = mat_exp_nilpotent((E(1, 2) * (E(1, 1) - E(3, 3))).kron(f0) * (zeta * zeta));
    MatRF fac4 = mat_exp_nilpotent(E(1, 2).kron(f1) * (-zeta));
    MatRF fac5 = mat_exp_nilpotent(E(1, 2).kron(f2) * (-zeta));
    MatRF fac6 = operator_power(I9 - I3.kron(f3) * zeta - ha.kron(f2) * (zeta * zeta),
                                (hb - ha).kron(I3));
    return fac1 * fac2 * fac3 * fac4 * fac5 * fac6;
}

namespace {

// order-h tensor comparison of r_cl against the target solution member with
// the Yang part graded separately (pole coefficient h, zeta -> h zeta)
struct Semiclass {
    bool scalar = false;
    RatFunc value;
};

Semiclass compare_semiclassical(const MatRF& rcl, const Solution& target, const VarSetPtr& vs,
                                const std::string& ua, const std::string& ub) {
    const int N = target.alg.N;
    std::map<std::string, RatFunc> bind{{"u", RatFunc::variable(vs, ua)},
                                        {"v", RatFunc::variable(vs, ub)}};
    for (const auto& p : target.vars->names())
        if (p != "u" && p != "v" && !bind.count(p))
            bind.emplace(p, vs->contains(p) ? RatFunc::variable(vs, p) : RatFunc::one(vs));
    MatRF tmat(N * N, N * N, vs);
    Tensor2 full = target.full_tensor();
    for (const auto& [k, c] : full.entries()) {
        int row = (k[0] - 1) * N + (k[2] - 1);
        int col = (k[1] - 1) * N + (k[3] - 1);
        tmat.at(row, col) = tmat.at(row, col) + c.subst(bind, vs);
    }
    MatRF diff = rcl - tmat;
    Semiclass out;
    RatFunc d0 = diff.at(0, 0);
    out.scalar = true;
    for (int i = 0; i < N * N && out.scalar; ++i)
        for (int j = 0; j < N * N && out.scalar; ++j) {
            if (i == j && diff.at(i, j) != d0) out.scalar = false;
            if (i != j && !diff.at(i, j).is_zero()) out.scalar = false;
        }
    out.value = d0;
    return out;
}

} // namespace

RationalTwistReport twisted_rational_R(YangianTwistId id, const VarSetPtr& vs) {
    RatFunc u1 = RatFunc::variable(vs, "u1"), u2 = RatFunc::variable(vs, "u2"),
            u3 = RatFunc::variable(vs, "u3");
    MatRF P = permutation_matrix(3, vs);
    auto Fat = [&](const std::string& leg) { return yangian_twist(id, vs, leg, "zeta"); };
    auto RF = [&](const RatFunc& a, const RatFunc& b, const std::string& la,
                  const std::string& lb) {
        MatRF f21 = P * Fat(la) * P;
        MatRF fb = Fat(lb);
        MatRF r = MatRF::identity(9, vs) + P * (RatFunc::one(vs) / (a - b));
        return f21 * r * fb.inverse();
    };
    RationalTwistReport rep;
    rep.r_twisted = RF(u1, u2, "u1", "u2");
    MatRF r12 = place_on_legs(RF(u1, u2, "u1", "u2"), 3, 0, 1, 3);
    MatRF r13 = place_on_legs(RF(u1, u3, "u1", "u3"), 3, 0, 2, 3);
    MatRF r23 = place_on_legs(RF(u2, u3, "u2", "u3"), 3, 1, 2, 3);
    rep.qybe_zero = (r12 * r13 * r23 - r23 * r13 * r12).is_zero();

    // semiclassical: scale zeta -> h zeta and the Yang constant -> h, expand
    RatFunc h = RatFunc::variable(vs, "hbar"), zeta = RatFunc::variable(vs, "zeta");
    MatRF f21h = (P * Fat("u1") * P).subst({{"zeta", zeta * h}}, vs);
    MatRF fh = Fat("u2").subst({{"zeta", zeta * h}}, vs);
    MatRF rh = MatRF::identity(9, vs) + P * (h / (u1 - u2));
    MatRF rfh = f21h * rh * fh.inverse();
    MatRF rcl(9, 9, vs);
    bool defined = true;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
            if (rfh.at(i, j).is_zero()) {
                if (i == j) defined = false;
                continue;
            }
            TruncSeries s = taylor_series(rfh.at(i, j), "hbar", 1);
            RatFunc c0 = s.coeff(0).subst({}, vs);
            if ((i == j && c0 != RatFunc::one(vs)) || (i != j && !c0.is_zero())) defined = false;
            rcl.at(i, j) = s.coeff(1).subst({}, vs);
        }
    if (defined) {
        Solution target = catalog_get(
            id == YangianTwistId::long_twist ? "rat.sl3.long" : "rat.sl3.short",
            {{"xi", RatFunc::variable(solution_vars(), "xi")}});
        // match the twist normalization: zeta plays the role of the dilation
        // parameter at the printed scale
        auto sc = compare_semiclassical(rcl, target, vs, "u1", "u2");
        rep.semiclassical_scalar = sc.scalar;
        rep.semiclassical_value = sc.value;
    }
    return rep;
}

MatRF r_e41(const VarSetPtr& vs, const std::string& ua, const std::string& ub,
            const RatFunc& eta, const RatFunc& xi) {
    RatFunc u1 = RatFunc::variable(vs, ua), u2 = RatFunc::variable(vs, ub);
    auto E2 = [&](int i, int j) {
        MatRF m(2, 2, vs);
        m.at(i - 1, j - 1) = RatFunc::one(vs);
        return m;
    };
    MatRF sz = E2(1, 1) - E2(2, 2), sm = E2(2, 1);
    MatRF P = permutation_matrix(2, vs);
    MatRF I4 = MatRF::identity(4, vs);
    RatFunc pre = (u1 - u2) / (u1 - u2 - eta);
    MatRF inner = I4 - P * (eta / (u1 - u2)) - sz.kron(sm) * (xi * u2) +
                  sm.kron(sz) * (xi * (u1 - eta)) + sm.kron(sm) * (xi * xi * u2 * (u1 - eta));
    return inner * pre;
}

Sl2RationalReport sl2_rational_check(const VarSetPtr& vs) {
    RatFunc eta = RatFunc::variable(vs, "eta"), xi = RatFunc::variable(vs, "xi");
    Sl2RationalReport rep;
    rep.r = r_e41(vs, "u1", "u2", eta, xi);
    MatRF r12 = place_on_legs(r_e41(vs, "u1", "u2", eta, xi), 3, 0, 1, 2);
    MatRF r13 = place_on_legs(r_e41(vs, "u1", "u3", eta, xi), 3, 0, 2, 2);
    MatRF r23 = place_on_legs(r_e41(vs, "u2", "u3", eta, xi), 3, 1, 2, 2);
    rep.qybe_zero = (r12 * r13 * r23 - r23 * r13 * r12).is_zero();

    // semiclassics against the printed rational solution: (eta, xi) ->
    // (-hbar, hbar xi); the sl(2) catalogue entry with the same tensor shape
    RatFunc h = RatFunc::variable(vs, "hbar");
    MatRF rh = r_e41(vs, "u1", "u2", -h, h * xi);
    MatRF rcl(4, 4, vs);
    bool defined = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (rh.at(i, j).is_zero()) {
                if (i == j) defined = false;
                continue;
            }
            TruncSeries s = taylor_series(rh.at(i, j), "hbar", 1);
            RatFunc c0 = s.coeff(0).subst({}, vs);
            if ((i == j && c0 != RatFunc::one(vs)) || (i != j && !c0.is_zero())) defined = false;
            rcl.at(i, j) = s.coeff(1).subst({}, vs);
        }
    if (defined) {
        // target: Omega/(u1-u2) + xi(u1 sm x sz - u2 sz x sm)
        auto E2 = [&](int i, int j) {
            MatRF m(2, 2, vs);
            m.at(i - 1, j - 1) = RatFunc::one(vs);
            return m;
        };
        MatRF sz = E2(1, 1) - E2(2, 2), sm = E2(2, 1);
        RatFunc u1 = RatFunc::variable(vs, "u1"), u2 = RatFunc::variable(vs, "u2");
        MatRF om = permutation_matrix(2, vs) - MatRF::identity(4, vs) * Rational(1, 2);
        MatRF target = om * (RatFunc::one(vs) / (u1 - u2)) + sm.kron(sz) * (xi * u1) -
                       sz.kron(sm) * (xi * u2);
        MatRF diff = rcl - target;
        RatFunc d0 = diff.at(0, 0);
        rep.semiclassical_scalar = true;
        for (int i = 0; i < 4 && rep.semiclassical_scalar; ++i)
            for (int j = 0; j < 4 && rep.semiclassical_scalar; ++j) {
                if (i == j && diff.at(i, j) != d0) rep.semiclassical_scalar = false;
                if (i != j && !diff.at(i, j).is_zero()) rep.semiclassical_scalar = false;
            }
        rep.semiclassical_value = d0;
    }
    return rep;
}

} // namespace ybe
