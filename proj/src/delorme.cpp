#include "ybe/delorme.hpp"

#include <stdexcept>

namespace ybe {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

VarSetPtr qv() {
    static VarSetPtr vs = VarSet::make({"t"});
    return vs;
}

Mat matmul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size()), m = static_cast<int>(b[0].size()),
              k = static_cast<int>(b.size());
    Mat r(n, Vec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Mat transpose(const Mat& a) {
    Mat r(a[0].size(), Vec(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

int rank_of(const Mat& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<RatFunc>> rs;
    for (const auto& r : rows) {
        std::vector<RatFunc> row;
        for (const auto& c : r) row.push_back(RatFunc::constant(qv(), c));
        rs.push_back(std::move(row));
    }
    return rank_of_rows(rs, qv());
}

} // namespace

LagrangianCartanData reconstruct_ia_prime(const SAdmissible& t, const CartanCoeffs& r_tensor,
                                          Algebra alg) {
    const int N = alg.N;
    LagrangianCartanData out;

    // operator A = psi_S pi1 + pi2 on the Cartan subalgebra, built from the
    // trace-form projection onto the S-span and the flip within it
    std::vector<Vec> hS;
    std::vector<int> sroots;
    for (int i = 1; i <= t.triple.rank; ++i) {
        if (i == t.alpha) continue;
        Vec v(N, 0);
        v[i - 1] = 1;
        v[i] = -1;
        hS.push_back(v);
        sroots.push_back(i);
    }
    const int k = static_cast<int>(hS.size());
    auto theta = theta_s(t.triple.rank, t.alpha);

    // Gram inverse of the S-span basis
    MatRF G(k, k, qv());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Rational s = 0;
            for (int m = 0; m < N; ++m) s += hS[a][m] * hS[b][m];
            G.at(a, b) = RatFunc::constant(qv(), s);
        }
    MatRF Gi = k ? G.inverse() : G;
    auto gi = [&](int a, int b) {
        return Gi.at(a, b).is_zero() ? Rational(0) : Gi.at(a, b).num().constant_term();
    };

    // pi1, psi pi1, pi2 = id - pi1 as N x N matrices acting on diagonal vectors
    Mat pi1(N, Vec(N, 0)), psipi1(N, Vec(N, 0)), id(N, Vec(N, 0));
    for (int m = 0; m < N; ++m) id[m][m] = 1;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Rational w = gi(a, b);
            if (w == 0) continue;
            Vec psi_ha(N, 0);
            int th = theta[sroots[a]];
            psi_ha[th - 1] = 1;
            psi_ha[th] = -1;
            for (int m = 0; m < N; ++m)
                for (int n2 = 0; n2 < N; ++n2) {
                    pi1[m][n2] += hS[a][m] * w * hS[b][n2];
                    psipi1[m][n2] += psi_ha[m] * w * hS[b][n2];
                }
        }
    Mat pi2(N, Vec(N, 0));
    // pi2 projects onto the orthogonal complement of the S-span inside the
    // traceless subspace; on the full diagonal space subtract the trace part
    Mat traceless(N, Vec(N, 0));
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2)
            traceless[m][n2] = Rational((m == n2) ? 1 : 0) - Rational(1, N);
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) pi2[m][n2] = traceless[m][n2] - pi1[m][n2];
    Mat A(N, Vec(N, 0));
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) A[m][n2] = psipi1[m][n2] + pi2[m][n2];

    // recover r from r~ = (A x id) r: invert A on the traceless space (extend
    // by the identity on the trace direction)
    Mat Aext = A;
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) Aext[m][n2] += Rational(1, N);
    MatRF Am(N, N, qv());
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) Am.at(m, n2) = RatFunc::constant(qv(), Aext[m][n2]);
    MatRF Ainv_m = Am.inverse();
    Mat Ainv(N, Vec(N, 0));
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2)
            Ainv[m][n2] = Ainv_m.at(m, n2).is_zero() ? Rational(0)
                                                     : Ainv_m.at(m, n2).num().constant_term();
    Mat r_plain = matmul(Ainv, r_tensor);   // r = (A^-1 x id) r~ acting on first leg

    // The endomorphism R pairs the recovered tensor against the trace form.
    // The two leg conventions differ by a transpose; the defining identities
    // single out the one below, which the tests pin down.
    Mat R = transpose(r_plain);
    out.endo_r = R;

    // identity A R + R^T A = id restricted to the traceless space
    Mat ARA(N, Vec(N, 0));
    Mat AR = matmul(A, R);
    Mat RTA = matmul(transpose(R), A);
    bool ok8 = true;
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) {
            Rational lhs = AR[m][n2] + RTA[m][n2];
            if (lhs != traceless[m][n2]) ok8 = false;
            ARA[m][n2] = lhs;
        }
    out.pairing_identity = ok8;

    // normalization: R((psi pi1 + pi2)(H_g) + (pi2 - pi1)(H_{A'g})) = H_g
    bool ok9 = true;
    Mat pi2mpi1(N, Vec(N, 0));
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2) pi2mpi1[m][n2] = pi2[m][n2] - pi1[m][n2];
    for (const auto& [g, ag] : t.triple.tau) {
        Vec hg(N, 0), hag(N, 0);
        hg[g - 1] = 1;
        hg[g] = -1;
        hag[ag - 1] = 1;
        hag[ag] = -1;
        Vec arg(N, 0);
        for (int m = 0; m < N; ++m)
            for (int n2 = 0; n2 < N; ++n2)
                arg[m] += A[m][n2] * hg[n2] + pi2mpi1[m][n2] * hag[n2];
        Vec img(N, 0);
        for (int m = 0; m < N; ++m)
            for (int n2 = 0; n2 < N; ++n2) img[m] += R[m][n2] * arg[n2];
        for (int m = 0; m < N; ++m)
            if (img[m] != hg[m]) ok9 = false;
    }
    out.normalization = ok9;

    // graph span {(R h, R' h)} with R' h = pi1 h - pi2 h - psi pi1 R h + pi2 R h
    Mat Rp(N, Vec(N, 0));
    Mat psipi1R = matmul(psipi1, R), pi2R = matmul(pi2, R);
    for (int m = 0; m < N; ++m)
        for (int n2 = 0; n2 < N; ++n2)
            Rp[m][n2] = pi1[m][n2] - pi2[m][n2] - psipi1R[m][n2] + pi2R[m][n2];
    // basis of h: traceless directions h_i = e_ii - e_{i+1,i+1}
    Mat graph;
    for (int i = 1; i < N; ++i) {
        Vec h(N, 0);
        h[i - 1] = 1;
        h[i] = -1;
        Vec row(2 * N, 0);
        for (int m = 0; m < N; ++m)
            for (int n2 = 0; n2 < N; ++n2) {
                row[m] += R[m][n2] * h[n2];
                row[N + m] += Rp[m][n2] * h[n2];
            }
        graph.push_back(row);
    }
    out.graph_basis = graph;

    // Delta_S = {(h + h', -psi h + h') : h in h_S, h' in zeta_S}
    Mat delta;
    for (int a = 0; a < k; ++a) {
        Vec row(2 * N, 0);
        Vec psi_ha(N, 0);
        int th = theta[sroots[a]];
        psi_ha[th - 1] = 1;
        psi_ha[th] = -1;
        for (int m = 0; m < N; ++m) {
            row[m] = hS[a][m];
            row[N + m] = -psi_ha[m];
        }
        delta.push_back(row);
    }
    // zeta_S basis: traceless vectors orthogonal to the S-span
    Mat zs_rows;
    {
        // nullspace of the k x N system <hS_a, v> = 0 within traceless vectors
        MatRF sysm(k + 1, N, qv());
        for (int a = 0; a < k; ++a)
            for (int m = 0; m < N; ++m) sysm.at(a, m) = RatFunc::constant(qv(), hS[a][m]);
        for (int m = 0; m < N; ++m) sysm.at(k, m) = RatFunc::one(qv());
        std::vector<RatFunc> zero(k + 1, RatFunc::zero(qv()));
        auto sol = solve_linear(sysm, zero);
        for (const auto& kv : sol->kernel) {
            Vec v(N, 0);
            for (int m = 0; m < N; ++m)
                if (!kv[m].is_zero()) v[m] = kv[m].num().constant_term();
            zs_rows.push_back(v);
        }
    }
    for (const auto& z : zs_rows) {
        Vec row(2 * N, 0);
        for (int m = 0; m < N; ++m) {
            row[m] = z[m];
            row[N + m] = z[m];
        }
        delta.push_back(row);
    }
    Mat joint = graph;
    for (const auto& r2 : delta) joint.push_back(r2);
    out.transversal = rank_of(joint) == rank_of(graph) + rank_of(delta);

    // i_a' = graph ∩ a', a' = {(h1,h2): gamma(h1)=0 for gamma in Gamma1,
    //                          gamma(h2)=0 for gamma in Gamma2}
    {
        // solve for combinations of graph rows that satisfy the a'-conditions
        const int g = static_cast<int>(graph.size());
        std::vector<Vec> conds;   // functionals applied to the combined vector
        for (int gam : t.triple.gamma1) {
            Vec f(2 * N, 0);
            f[gam - 1] = 1;
            f[gam] = -1;
            conds.push_back(f);
        }
        for (int gam : t.triple.gamma2) {
            Vec f(2 * N, 0);
            f[N + gam - 1] = 1;
            f[N + gam] = -1;
            conds.push_back(f);
        }
        MatRF sysm(static_cast<int>(conds.size()), g, qv());
        for (std::size_t ci = 0; ci < conds.size(); ++ci)
            for (int gi2 = 0; gi2 < g; ++gi2) {
                Rational s = 0;
                for (int m = 0; m < 2 * N; ++m) s += conds[ci][m] * graph[gi2][m];
                sysm.at(static_cast<int>(ci), gi2) = RatFunc::constant(qv(), s);
            }
        std::vector<RatFunc> zero(conds.size(), RatFunc::zero(qv()));
        auto sol = solve_linear(sysm, zero);
        Mat ia;
        for (const auto& kv : sol->kernel) {
            Vec v(2 * N, 0);
            for (int gi2 = 0; gi2 < g; ++gi2) {
                Rational c = kv[gi2].is_zero() ? Rational(0) : kv[gi2].num().constant_term();
                if (c == 0) continue;
                for (int m = 0; m < 2 * N; ++m) v[m] += c * graph[gi2][m];
            }
            ia.push_back(v);
        }
        out.ia_basis = ia;
        // isotropy w.r.t. Q'((a,b),(c,d)) = <a,c> - <b,d> and dimension check:
        // dim a' = 2(N-1) - |Gamma1| - |Gamma2|
        bool iso = true;
        for (const auto& x : ia)
            for (const auto& y : ia) {
                Rational s = 0;
                for (int m = 0; m < N; ++m) s += x[m] * y[m] - x[N + m] * y[N + m];
                if (s != 0) iso = false;
            }
        int dim_aprime = 2 * (N - 1) - static_cast<int>(t.triple.gamma1.size()) -
                         static_cast<int>(t.triple.gamma2.size());
        out.lagrangian = iso && 2 * rank_of(ia) == dim_aprime;
    }
    return out;
}

} // namespace ybe
