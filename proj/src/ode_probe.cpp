#include "ybe/ode_probe.hpp"

#include "ybe/pde.hpp"

#include <stdexcept>
#include <vector>

namespace ybe {

namespace {

using C = std::complex<double>;
using CMat = std::vector<std::vector<C>>;
using CVec = std::vector<C>;

double rat_to_double(const Rational& r) {
    return static_cast<double>(numerator(r).convert_to<double>()) /
           static_cast<double>(denominator(r).convert_to<double>());
}

CMat matmul(const CMat& a, const CMat& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    CMat r(n, CVec(m, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

CMat matinv(CMat a) {
    const int n = static_cast<int>(a.size());
    CMat inv(n, CVec(n, 0.0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < n; ++col) {
        int p = col;
        for (int i = col; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[p][col])) p = i;
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        C piv = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= piv;
            inv[col][j] /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            C f = a[i][col];
            if (f == C(0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

OdeProbeReport psi_ode_probe(const Solution& x,
                             const std::vector<std::pair<C, C>>& sample_pairs,
                             double tol) {
    const int N = x.alg.N;
    // gl basis e_ij flattened; the holonomy acts in the adjoint representation
    const int d = N * N;
    LieElement h = h_of_z(x);

    // h(z) as numeric polynomial coefficients per basis slot
    std::size_t ui = x.vars->index("u");
    std::vector<std::vector<C>> hpoly(d);   // slot -> coefficients in z
    for (const auto& [k, c] : h.coeffs()) {
        if (!c.is_polynomial()) throw std::invalid_argument("holonomy generator must be polynomial");
        int slot = (k.first - 1) * N + (k.second - 1);
        for (const auto& [m, cc] : c.num().terms()) {
            for (std::size_t t = 0; t < m.size(); ++t)
                if (t != ui && m[t] != 0)
                    throw std::invalid_argument("probe requires numeric parameters");
            if (static_cast<int>(hpoly[slot].size()) <= m[ui]) hpoly[slot].resize(m[ui] + 1, 0.0);
            hpoly[slot][m[ui]] += rat_to_double(cc);
        }
    }
    auto h_at = [&](C z) {
        CMat m(N, CVec(N, 0.0));
        for (int slot = 0; slot < d; ++slot) {
            C val = 0.0, pw = 1.0;
            for (const C& coef : hpoly[slot]) {
                val += coef * pw;
                pw *= z;
            }
            m[slot / N][slot % N] = val;
        }
        return m;
    };
    // ad(h) acting on gl coordinates: (ad h)(e_ij) = h e_ij - e_ij h
    auto ad_at = [&](C z) {
        CMat hm = h_at(z);
        CMat m(d, CVec(d, 0.0));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int col = i * N + j;
                for (int a = 0; a < N; ++a) {
                    m[a * N + j][col] += hm[a][i];   // h e_ij picks up e_aj
                    m[i * N + a][col] -= hm[j][a];   // e_ij h picks up e_ia
                }
            }
        return m;
    };

    // integrate dU/dt = ad(h(e^t)) U from t = 0 to log z
    auto holonomy = [&](C z, int steps) {
        CMat U(d, CVec(d, 0.0));
        for (int i = 0; i < d; ++i) U[i][i] = 1.0;
        C t_end = std::log(z);
        C dt = t_end / static_cast<double>(steps);
        auto rhs = [&](C t, const CMat& u) {
            CMat a = ad_at(std::exp(t));
            return matmul(a, u);
        };
        C t = 0.0;
        for (int s = 0; s < steps; ++s) {
            CMat k1 = rhs(t, U);
            auto step = [&](const CMat& base, const CMat& k, C f) {
                CMat r = base;
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) r[i][j] += f * k[i][j];
                return r;
            };
            CMat k2 = rhs(t + dt * 0.5, step(U, k1, dt * 0.5));
            CMat k3 = rhs(t + dt * 0.5, step(U, k2, dt * 0.5));
            CMat k4 = rhs(t + dt, step(U, k3, dt));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    U[i][j] += dt / 6.0 * (k1[i][j] + 2.0 * k2[i][j] + 2.0 * k3[i][j] + k4[i][j]);
            t += dt;
        }
        return U;
    };

    // X(z1,z2) as numeric coefficient matrix over the flattened gl basis
    Tensor2 full = x.full_tensor();
    auto x_at = [&](C z1, C z2) {
        CMat m(d, CVec(d, 0.0));
        for (const auto& [k, c] : full.entries()) {
            // evaluate the rational function at (z1, z2)
            auto eval_poly = [&](const Poly& p) {
                C acc = 0.0;
                std::size_t vi = x.vars->index("v");
                for (const auto& [mono, cc] : p.terms()) {
                    C term = rat_to_double(cc);
                    for (std::size_t t = 0; t < mono.size(); ++t) {
                        if (mono[t] == 0) continue;
                        C base;
                        if (t == ui) base = z1;
                        else if (t == vi) base = z2;
                        else throw std::invalid_argument("probe requires numeric parameters");
                        for (int e = 0; e < mono[t]; ++e) term *= base;
                    }
                    acc += term;
                }
                return acc;
            };
            C val = eval_poly(c.num());
            for (const auto& [f, e] : c.den_factors()) {
                C dv = eval_poly(f);
                for (int t = 0; t < e; ++t) val /= dv;
            }
            m[(k[0] - 1) * N + (k[1] - 1)][(k[2] - 1) * N + (k[3] - 1)] += val;
        }
        return m;
    };

    auto undressed = [&](C z1, C z2, int steps) {
        CMat u1 = matinv(holonomy(z1, steps));
        CMat u2 = matinv(holonomy(z2, steps));
        CMat xm = x_at(z1, z2);
        // coefficients transform per leg: Y = u1 X u2^T in flattened form
        CMat tmp = matmul(u1, xm);
        CMat u2t(d, CVec(d, 0.0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) u2t[i][j] = u2[j][i];
        return matmul(tmp, u2t);
    };

    OdeProbeReport rep;
    double maxdev = 0.0;
    const int steps = 400;
    for (const auto& [z1, z2] : sample_pairs) {
        if (z1 == C(0.0) || z2 == C(0.0)) throw std::invalid_argument("samples must avoid zero");
        // compare against the scaled pair (s z1, s z2)
        C s(1.37, 0.0);
        CMat y1 = undressed(z1, z2, steps);
        CMat y2 = undressed(s * z1, s * z2, steps);
        double dev = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) dev = std::max(dev, std::abs(y1[i][j] - y2[i][j]));
        if (dev > tol) {
            // halve the step twice before giving up
            CMat y1b = undressed(z1, z2, steps * 4);
            CMat y2b = undressed(s * z1, s * z2, steps * 4);
            double dev2 = 0.0;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) dev2 = std::max(dev2, std::abs(y1b[i][j] - y2b[i][j]));
            if (dev2 > tol) {
                rep.inconclusive = true;
                rep.max_deviation = dev2;
                return rep;
            }
            dev = dev2;
        }
        maxdev = std::max(maxdev, dev);
    }
    rep.pass = true;
    rep.max_deviation = maxdev;
    return rep;
}

} // namespace ybe
