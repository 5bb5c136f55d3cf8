#include "ybe/chain.hpp"

#include "ybe/yangian.hpp"

#include <stdexcept>

namespace ybe {

VarSetPtr chain_vars() {
    static VarSetPtr vs =
        VarSet::make({"z", "zp", "zs", "z1", "z2", "q", "a", "b", "eta", "xi", "hbar"});
    return vs;
}

namespace {

RatFunc param_or(const ChainSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it != spec.params.end()) return it->second;
    return RatFunc::variable(chain_vars(), name);
}

const QRep& chain_rep() {
    static QRep rep(QContext::plain(2, chain_vars()), true);
    return rep;
}

} // namespace

Rational sample_prime(unsigned long long& state) {
    // primes in [101, 997], drawn by a splitmix step
    static const int primes[] = {
        101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
        191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277,
        281, 283, 293, 307, 311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383,
        389, 397, 401, 409, 419, 421, 431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487,
        491, 499, 503, 509, 521, 523, 541, 547, 557, 563, 569, 571, 577, 587, 593, 599, 601,
        607, 613, 617, 619, 631, 641, 643, 647, 653, 659, 661, 673, 677, 683, 691, 701, 709,
        719, 727, 733, 739, 743, 751, 757, 761, 769, 773, 787, 797, 809, 811, 821, 823, 827,
        829, 839, 853, 857, 859, 863, 877, 881, 883, 887, 907, 911, 919, 929, 937, 941, 947,
        953, 967, 971, 977, 983, 991, 997};
    state += 0x9e3779b97f4a7c15ull;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return Rational(primes[z % (sizeof(primes) / sizeof(primes[0]))]);
}

MatRF chain_r(const ChainSpec& spec, const std::string& ua, const std::string& ub) {
    const QRep& rep = chain_rep();
    auto vs = chain_vars();
    switch (spec.family) {
        case ChainSpec::E32: {
            MatRF r = r_e32(rep, ua, ub);
            return r.subst({{"q", param_or(spec, "q")}}, vs);
        }
        case ChainSpec::E34: {
            MatRF r = r_e34(rep, ua, ub, param_or(spec, "a"), param_or(spec, "b"));
            return r.subst({{"q", param_or(spec, "q")}}, vs);
        }
        case ChainSpec::E41:
            return r_e41(vs, ua, ub, param_or(spec, "eta"), param_or(spec, "xi"));
    }
    throw std::logic_error("unreachable");
}

MatRF transfer_matrix(const ChainSpec& spec, const std::string& zname) {
    if (spec.sites < 1 || spec.sites > 6) throw std::invalid_argument("site guard exceeded");
    auto vs = chain_vars();
    const int L = spec.sites;
    const int legs = L + 1;   // leg 0 is auxiliary
    MatRF r2 = chain_r(spec, zname, "z2");
    // substitute z2 parameter value if given
    auto it = spec.params.find("z2");
    if (it != spec.params.end()) r2 = r2.subst({{"z2", it->second}}, vs);
    int dim = 1 << legs;
    MatRF prod = MatRF::identity(dim, vs);
    for (int site = L; site >= 1; --site) prod = prod * place_on_legs(r2, legs, 0, site, 2);
    return partial_trace_first(prod, 2, 1 << L);
}

CommuteReport commute_check_symbolic(const ChainSpec& spec) {
    if (spec.sites > 3) throw std::invalid_argument("symbolic commute guard is 3 sites");
    MatRF tp = transfer_matrix(spec, "zp");
    MatRF ts = transfer_matrix(spec, "zs");
    CommuteReport rep;
    rep.zero = (tp * ts - ts * tp).is_zero();
    rep.samples_checked = 0;
    return rep;
}

CommuteReport commute_check_sampled(const ChainSpec& spec, int npairs, unsigned long long seed) {
    if (spec.sites > 5) throw std::invalid_argument("sampled commute guard is 5 sites");
    auto vs = chain_vars();
    CommuteReport rep;
    unsigned long long state = seed;
    for (int s = 0; s < npairs; ++s) {
        for (int attempt = 0;; ++attempt) {
            try {
                ChainSpec numeric = spec;
                auto bindp = [&](const char* n) {
                    if (!numeric.params.count(n))
                        numeric.params[n] = RatFunc::constant(vs, sample_prime(state));
                };
                bindp("q");
                bindp("z2");
                if (spec.family == ChainSpec::E34) {
                    bindp("a");
                    bindp("b");
                }
                if (spec.family == ChainSpec::E41) {
                    bindp("eta");
                    bindp("xi");
                }
                MatRF tp = transfer_matrix(numeric, "zp")
                               .subst({{"zp", RatFunc::constant(vs, sample_prime(state))}}, vs);
                MatRF ts = transfer_matrix(numeric, "zs")
                               .subst({{"zs", RatFunc::constant(vs, sample_prime(state))}}, vs);
                if (!(tp * ts - ts * tp).is_zero()) rep.zero = false;
                ++rep.samples_checked;
                break;
            } catch (const std::domain_error&) {
                if (attempt >= 5) throw;
            }
        }
    }
    return rep;
}

MatRF hamiltonian_from_transfer(const ChainSpec& spec) {
    auto vs = chain_vars();
    MatRF t = transfer_matrix(spec, "z");
    RatFunc z2 = param_or(spec, "z2");
    MatRF dt(t.rows(), t.cols(), vs);
    for (int i = 0; i < t.rows(); ++i)
        for (int j = 0; j < t.cols(); ++j)
            if (!t.at(i, j).is_zero()) dt.at(i, j) = t.at(i, j).derivative("z");
    std::map<std::string, RatFunc> at_z2{{"z", z2}};
    MatRF dt0 = dt.subst(at_z2, vs);
    MatRF t0 = t.subst(at_z2, vs);
    RatFunc pre;
    if (spec.family == ChainSpec::E41) {
        // rational family at the symmetric-point limit: prefactor -eta
        pre = -param_or(spec, "eta");
    } else {
        RatFunc q = param_or(spec, "q");
        pre = (q.inverse() - q) * z2;
    }
    return dt0 * t0.inverse() * pre;
}

std::pair<RatFunc, RatFunc> hamiltonian_constants(const ChainSpec& spec) {
    auto vs = chain_vars();
    RatFunc z2 = param_or(spec, "z2");
    if (spec.family == ChainSpec::E32 || spec.family == ChainSpec::E34) {
        RatFunc q = param_or(spec, "q");
        RatFunc a = spec.family == ChainSpec::E34 ? param_or(spec, "a") : RatFunc::zero(vs);
        RatFunc b = spec.family == ChainSpec::E34 ? param_or(spec, "b") : RatFunc::zero(vs);
        // sign tied to the verified R-matrix orientation
        RatFunc C = (q - RatFunc::one(vs)) * Rational(1, 2) * (a * z2 * q.inverse() - b);
        RatFunc D = (a * z2 + b) * (q.inverse() * a * z2 + q * b);
        return {C, D};
    }
    // rational family at q = 1
    RatFunc eta = param_or(spec, "eta"), xi = param_or(spec, "xi");
    RatFunc C = -(xi * eta) * Rational(1, 2);
    RatFunc D = xi * xi * z2 * (z2 - eta);
    return {C, D};
}

MatRF hamiltonian_closed_form(const ChainSpec& spec) {
    if (spec.sites < 2) throw std::invalid_argument("closed form needs at least two sites");
    auto vs = chain_vars();
    auto E2 = [&](int i, int j) {
        MatRF m(2, 2, vs);
        m.at(i - 1, j - 1) = RatFunc::one(vs);
        return m;
    };
    MatRF sp = E2(1, 2), sm = E2(2, 1), sz = E2(1, 1) - E2(2, 2);
    RatFunc q = spec.family == ChainSpec::E41 ? RatFunc::one(vs) : param_or(spec, "q");
    auto [C, D] = hamiltonian_constants(spec);
    MatRF h2 = sp.kron(sm) + sm.kron(sp) + sz.kron(sz) * ((q + q.inverse()) * Rational(1, 4)) +
               (sz.kron(sm) + sm.kron(sz)) * C + sm.kron(sm) * D;
    const int L = spec.sites;
    int dim = 1 << L;
    MatRF H(dim, dim, vs);
    for (int k = 1; k <= L; ++k) {
        int k2 = k % L + 1;
        H = H + place_on_legs(h2, L, k - 1, k2 - 1, 2);
    }
    return H;
}

ScalarGap hamiltonian_scalar_gap(const ChainSpec& spec) {
    MatRF hf = hamiltonian_from_transfer(spec);
    MatRF hc = hamiltonian_closed_form(spec);
    MatRF d = hf - hc;
    ScalarGap g;
    g.scalar = true;
    g.value = d.at(0, 0);
    for (int i = 0; i < d.rows() && g.scalar; ++i)
        for (int j = 0; j < d.cols() && g.scalar; ++j) {
            if (i == j && d.at(i, j) != g.value) g.scalar = false;
            if (i != j && !d.at(i, j).is_zero()) g.scalar = false;
        }
    return g;
}

bool integrability_smoke(const ChainSpec& spec, int npoints, unsigned long long seed) {
    auto vs = chain_vars();
    MatRF hc = hamiltonian_closed_form(spec);
    unsigned long long state = seed;
    for (int s = 0; s < npoints; ++s) {
        for (int attempt = 0;; ++attempt) {
            try {
                MatRF t = transfer_matrix(spec, "z")
                              .subst({{"z", RatFunc::constant(vs, sample_prime(state))}}, vs);
                if (!(hc * t - t * hc).is_zero()) return false;
                break;
            } catch (const std::domain_error&) {
                if (attempt >= 5) throw;
            }
        }
    }
    return true;
}

} // namespace ybe
