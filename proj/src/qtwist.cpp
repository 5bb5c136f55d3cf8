#include "ybe/qtwist.hpp"

#include <stdexcept>

namespace ybe {

Twist Twist::inverse() const {
    Twist r;
    if (cartan) {
        CartanTwist neg = *cartan;
        for (auto& row : neg.c)
            for (auto& e : row) e = -e;
        r.cartan = neg;
        // inverse order: Cartan first would be wrong; we fold it by keeping
        // the convention F = factors * cartan, so F^-1 = cartan^-1 * reversed
        // factors^-1. Cartan factors commute with nothing in general, so we
        // represent the inverse as a Twist with the Cartan applied first via
        // an explicit marker: store it as leading factor-free cartan and
        // reverse factors afterwards.
    }
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        TwistFactor f = *it;
        f.bexp = -f.bexp;
        f.coeff = -f.coeff;
        r.factors.push_back(std::move(f));
    }
    r.cartan_first = true;
    return r;
}

Twist Twist::swapped() const {
    Twist r = *this;
    for (auto& f : r.factors) std::swap(f.x, f.y);
    if (r.cartan) {
        auto& c = r.cartan->c;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) std::swap(c[i][j], c[j][i]);
    }
    return r;
}

MatRF q_exp_nilpotent(const MatRF& m, const RatFunc& qbase) {
    const int n = m.rows();
    MatRF acc = MatRF::identity(n, m.vars());
    MatRF term = acc;
    RatFunc fact = RatFunc::one(m.vars());
    RatFunc one = fact;
    for (int k = 1; k <= n + 1; ++k) {
        term = term * m;
        if (term.is_zero()) break;
        // (k)_q = (1-q^k)/(1-q)
        RatFunc kq = (one - qbase.pow(k)) / (one - qbase);
        fact = fact * kq;
        acc = acc + term * fact.inverse();
    }
    return acc;
}

namespace {

MatRF cartan_twist_image(const CartanTwist& ct, const QRep& rep, const std::vector<Leg>& legs,
                         const std::vector<int>& S, const std::vector<int>& T) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    int dim = 1;
    for (std::size_t i = 0; i < legs.size(); ++i) dim *= N;
    MatRF out(dim, dim, ctx.vars);
    // diagonal: q^{sum_ab c_ab wS_a wT_b} with group weights additive
    std::vector<int> idx(legs.size());
    for (int d = 0; d < dim; ++d) {
        int t = d;
        for (int leg = static_cast<int>(legs.size()) - 1; leg >= 0; --leg) {
            idx[leg] = t % N;
            t /= N;
        }
        std::vector<int> wS(N, 0), wT(N, 0);
        for (int leg : S) wS[idx[leg]] += 1;
        for (int leg : T) wT[idx[leg]] += 1;
        Rational e = 0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (wS[a] && wT[b]) e += ct.c[a][b] * wS[a] * wT[b];
        out.at(d, d) = ctx.q_to(e);
    }
    return out;
}

} // namespace

MatRF twist_image(const Twist& f, const QRep& rep, const std::vector<Leg>& legs,
                  const std::vector<int>& S, const std::vector<int>& T) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    int dim = 1;
    for (std::size_t i = 0; i < legs.size(); ++i) dim *= N;
    MatRF acc = MatRF::identity(dim, ctx.vars);
    auto apply_factors = [&] {
        for (const auto& fac : f.factors) {
            MatRF arg = rep.image_pair(fac.x, fac.y, legs, S, T) * fac.coeff;
            acc = acc * q_exp_nilpotent(arg, ctx.q_to(fac.bexp));
        }
    };
    if (f.cartan_first) {
        if (f.cartan) acc = acc * cartan_twist_image(*f.cartan, rep, legs, S, T);
        apply_factors();
    } else {
        apply_factors();
        if (f.cartan) acc = acc * cartan_twist_image(*f.cartan, rep, legs, S, T);
    }
    return acc;
}

MatRF twist_matrix(const Twist& f, const QRep& rep, const Leg& a, const Leg& b) {
    return twist_image(f, rep, {a, b}, {0}, {1});
}

CartanTwist diagonal_pairing_twist(int N) {
    CartanTwist ct;
    ct.c.assign(N, std::vector<Rational>(N, 0));
    for (int i = 0; i < N; ++i) ct.c[i][i] = 1;
    return ct;
}

CartanTwist cg_cartan_twist(int N) { return CartanTwist{cg_cartan_exponents(N)}; }

MatRF universal_r_constant(const QRep& rep) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    std::vector<Leg> legs{Leg{false, ""}, Leg{false, ""}};
    MatRF acc = MatRF::identity(N * N, ctx.vars);
    RatFunc q = ctx.q_to(1);
    RatFunc coeff = q - q.inverse();
    // ordered product over the normal ordering: (1,2),(1,3),(2,3),(1,4),...
    for (int j = 2; j <= N; ++j)
        for (int i = 1; i < j; ++i) {
            MatRF arg = rep.image_pair(cw_element(ctx, i, j, false), cw_element(ctx, j, i, false),
                                       legs, {0}, {1}) * coeff;
            acc = acc * q_exp_nilpotent(arg, ctx.q_to(-2));
        }
    return acc * cartan_twist_image(diagonal_pairing_twist(N), rep, legs, {0}, {1});
}

MatRF trigonometric_r_evaluation(const QRep& rep, const std::string& za, const std::string& zb) {
    const QContext& ctx = rep.ctx();
    const int N = ctx.N;
    RatFunc z1 = RatFunc::variable(ctx.vars, za), z2 = RatFunc::variable(ctx.vars, zb);
    RatFunc q = ctx.q_to(1), qi = ctx.q_to(-1);
    RatFunc b = (z1 - z2) / (qi * z1 - q * z2);
    RatFunc cfac = (qi - q) / (qi * z1 - q * z2);
    MatRF r(N * N, N * N, ctx.vars);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int row = i * N + j;
            if (i == j) {
                r.at(row, row) = RatFunc::one(ctx.vars);
            } else {
                r.at(row, row) = b;
                int swapped = j * N + i;
                r.at(row, swapped) = cfac * (i < j ? z2 : z1);
            }
        }
    return r;
}

namespace {

// Inverse of the ordered block of shifted primed root factors: the cocycle
// property holds for the product of block inverses, so each block enters as
// inverse q-exponentials in reversed normal order.
void push_shifted_product(Twist& tw, const QContext& ctx, int M, int k, bool affine) {
    RatFunc q = ctx.q_to(1);
    RatFunc coeff = -(q - q.inverse());
    std::vector<std::pair<int, int>> pairs;
    for (int j = 2; j <= M - k; ++j)
        for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        auto [i, j] = *it;
        TwistFactor f;
        f.bexp = 2;
        f.coeff = coeff;
        if (affine && j == M - k) {
            // the last column wraps to the affine root vectors e'_{i+k,1}
            f.x = cw_affine_primed(ctx, i + k);
            f.y = cw_element(ctx, j, i, true);
        } else {
            f.x = cw_element(ctx, i + k, j + k, true);
            f.y = cw_element(ctx, j, i, true);
        }
        tw.factors.push_back(std::move(f));
    }
}

} // namespace

Twist cremmer_gervais_twist(const QContext& ctx_np1) {
    const int M = ctx_np1.N;   // N+1
    Twist tw;
    for (int k = M - 2; k >= 1; --k) push_shifted_product(tw, ctx_np1, M, k, false);
    tw.cartan = cg_cartan_twist(M);
    return tw;
}

Twist affine_cremmer_gervais_twist(const QContext& ctx_n) {
    const int N = ctx_n.N;
    const int M = N + 1;
    Twist tw;
    for (int k = M - 2; k >= 1; --k) push_shifted_product(tw, ctx_n, M, k, true);
    tw.cartan = cg_cartan_twist(N);
    return tw;
}

Twist cremmer_gervais_twist_shifted(const QContext& ctx_np1,
                                    const std::vector<std::vector<Rational>>& cartan_exps) {
    const int M = ctx_np1.N;       // gl_M with the block in rows/cols 2..M
    const int N = M - 1;
    Twist tw;
    RatFunc q = ctx_np1.q_to(1);
    RatFunc coeff = -(q - q.inverse());
    for (int k = N - 2; k >= 1; --k) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 2; j <= N - k; ++j)
            for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
        for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
            auto [i, j] = *it;
            TwistFactor f;
            f.bexp = 2;
            f.coeff = coeff;
            f.x = cw_element_primed_with(ctx_np1, i + k + 1, j + k + 1, cartan_exps);
            f.y = cw_element_primed_with(ctx_np1, j + 1, i + 1, cartan_exps);
            tw.factors.push_back(std::move(f));
        }
    }
    tw.cartan = CartanTwist{cartan_exps};
    return tw;
}

Twist affine_cremmer_gervais_twist_shifted(const QContext& ctx_n,
                                    const std::vector<std::vector<Rational>>& cartan_exps) {
    const int N = ctx_n.N;
    Twist tw;
    RatFunc q = ctx_n.q_to(1);
    RatFunc coeff = -(q - q.inverse());
    for (int k = N - 2; k >= 1; --k) {
        std::vector<std::pair<int, int>> pairs;
        for (int j = 2; j <= N - k; ++j)
            for (int i = 1; i < j; ++i) pairs.emplace_back(i, j);
        for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
            auto [i, j] = *it;
            TwistFactor f;
            f.bexp = 2;
            f.coeff = coeff;
            if (j == N - k) {
                f.x = cw_affine_primed_with(ctx_n, i + k, cartan_exps);
                f.y = cw_element_primed_with(ctx_n, j, i, cartan_exps);
            } else {
                f.x = cw_element_primed_with(ctx_n, i + k, j + k, cartan_exps);
                f.y = cw_element_primed_with(ctx_n, j, i, cartan_exps);
            }
            tw.factors.push_back(std::move(f));
        }
    }
    tw.cartan = CartanTwist{cartan_exps};
    return tw;
}

} // namespace ybe
