#include "ybe/suites.hpp"

#include "ybe/bd.hpp"
#include "ybe/chain.hpp"
#include "ybe/cybe.hpp"
#include "ybe/delorme.hpp"
#include "ybe/ode_probe.hpp"
#include "ybe/oracle.hpp"
#include "ybe/pde.hpp"
#include "ybe/qchecks.hpp"
#include "ybe/seaweed.hpp"
#include "ybe/series.hpp"
#include "ybe/yangian.hpp"

#include <chrono>
#include <cstdlib>
#include <future>

namespace ybe {

int thread_cap() {
    const char* env = std::getenv("YBE_FORGE_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

namespace {

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// run one closure per catalog id, optionally in parallel
void per_catalog(VerificationReport& rep, const std::string& label,
                 const std::function<std::pair<bool, std::string>(const Solution&)>& body) {
    auto ids = catalog_ids();
    int cap = thread_cap();
    std::vector<std::pair<std::string, std::future<std::pair<bool, std::string>>>> running;
    std::vector<std::pair<std::string, std::pair<bool, std::string>>> results(ids.size());
    if (cap <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto t0 = std::chrono::steady_clock::now();
            Solution s = catalog_get_symbolic(ids[i]);
            auto r = body(s);
            add_check(rep, label + " " + ids[i], r.first, r.second, ms_since(t0));
        }
        return;
    }
    std::vector<std::future<std::pair<bool, std::string>>> futs(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        futs[i] = std::async(std::launch::async, [&, i] {
            Solution s = catalog_get_symbolic(ids[i]);
            return body(s);
        });
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto r = futs[i].get();
        add_check(rep, label + " " + ids[i], r.first, r.second);
    }
}

} // namespace

VerificationReport suite_cybe() {
    VerificationReport rep;
    rep.suite = "cybe";
    per_catalog(rep, "cybe", [](const Solution& s) {
        bool z = cybe_residual(s).is_zero();
        return std::make_pair(z, std::string(z ? "residual 0" : "residual nonzero"));
    });
    return rep;
}

VerificationReport suite_unitarity() {
    VerificationReport rep;
    rep.suite = "unitarity";
    per_catalog(rep, "unitarity", [](const Solution& s) {
        bool z = unitarity_residual(s).is_zero();
        return std::make_pair(z, std::string(z ? "residual 0" : "residual nonzero"));
    });
    return rep;
}

VerificationReport suite_oracle(unsigned long long seed) {
    VerificationReport rep;
    rep.suite = "oracle";
    // catalog agreement on quasi-trigonometric sl entries
    for (const auto& id : catalog_ids()) {
        Solution s = catalog_get_symbolic(id);
        if (s.kind != Solution::quasi_trigonometric) continue;
        auto t0 = std::chrono::steady_clock::now();
        std::size_t ui = s.vars->index("u"), vi = s.vars->index("v");
        int deg = 0;
        for (const auto& [k, c] : s.poly_part.entries())
            for (const auto& [m, cc] : c.num().terms()) deg = std::max(deg, m[ui] + m[vi]);
        auto orep = subalgebra_oracle(s, deg + 1);
        bool cy = cybe_residual(s).is_zero();
        add_check(rep, "oracle agreement " + id, orep.pass == cy,
                  orep.pass ? "pass" : orep.witness, ms_since(t0));
    }
    // fuzzed low-degree perturbations of the base entry, both directions
    unsigned long long state = seed;
    Solution base = catalog_get_symbolic("sl2.X0");
    auto vs = base.vars;
    RatFunc u = RatFunc::variable(vs, "u"), v = RatFunc::variable(vs, "v");
    int agree = 0, total = 0, pass_count = 0;
    for (int t = 0; t < 20; ++t) {
        Solution pert = base;
        // random skew perturbation c (x (u e (x) h - v h (x) e)-style terms to
        // hit both verdicts; even entries stay unperturbed (oracle must pass)
        Rational c = Rational(numerator(sample_prime(state)) % 7) - 3;
        int shape = static_cast<int>(numerator(sample_prime(state)) % 4);
        LieElement e = LieElement::unit(base.alg, vs, 1, 2);
        LieElement f = LieElement::unit(base.alg, vs, 2, 1);
        LieElement h = LieElement::unit(base.alg, vs, 1, 1) -
                       LieElement::unit(base.alg, vs, 2, 2);
        Tensor2 extra(base.alg, vs);
        switch (shape) {
            case 0: extra = tensor(e, e) * ((u - v) * c); break;                    // stays valid
            case 1: extra = tensor(f, f) * ((u - v) * c); break;                    // breaks
            case 2: extra = wedge(e, f) * c; break;                                 // breaks
            case 3: extra = wedge(e, h) * c; break;                                 // stays valid
        }
        pert.poly_part = pert.poly_part + extra;
        bool cy = cybe_residual(pert).is_zero() && unitarity_residual(pert).is_zero();
        auto orep = subalgebra_oracle(pert, 3);
        if (orep.pass == cy) ++agree;
        if (cy) ++pass_count;
        ++total;
    }
    add_check(rep, "oracle agreement on 20 fuzzed perturbations", agree == total,
              std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
                  std::to_string(pass_count) + " valid");
    return rep;
}

VerificationReport suite_bd_enumeration() {
    VerificationReport rep;
    rep.suite = "bd-enumeration";
    for (int r = 1; r <= 5; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        auto fast = enumerate_bd(r);
        auto brute = enumerate_bd_bruteforce(r);
        auto same = [&] {
            if (fast.size() != brute.size()) return false;
            for (const auto& t : fast) {
                bool found = false;
                for (const auto& b : brute)
                    if (t == b) found = true;
                if (!found) return false;
            }
            return true;
        }();
        add_check(rep, "enumeration matches brute force, rank " + std::to_string(r), same,
                  std::to_string(fast.size()) + " triples", ms_since(t0));
    }
    add_check(rep, "rank 1 count", enumerate_bd(1).size() == 1, "1 expected");
    add_check(rep, "rank 2 count", enumerate_bd(2).size() == 3, "3 expected");
    for (const auto& t : enumerate_bd(4))
        if (!bd_admissible(t)) {
            add_check(rep, "self-consistency rank 4", false);
            return rep;
        }
    add_check(rep, "every enumerated triple is admissible (rank 4)", true);
    return rep;
}

VerificationReport suite_cartan_solvers() {
    VerificationReport rep;
    rep.suite = "cartan-solvers";
    auto vs = VarSet::make({"t"});
    for (int N = 2; N <= 5; ++N) {
        BDTriple cg;
        cg.rank = N - 1;
        for (int i = 1; i <= N - 2; ++i) {
            cg.gamma1.push_back(i);
            cg.gamma2.push_back(i + 1);
            cg.tau.emplace_back(i, i + 1);
        }
        auto t0 = std::chrono::steady_clock::now();
        auto sol = solve_cartan_bd(cg, {N, Algebra::gl});
        add_check(rep, "closed-form Cartan tensor in gl(" + std::to_string(N) + ") solution set",
                  sol.contains(cg_cartan_closed_form(N), vs), "", ms_since(t0));
    }
    {
        BDTriple e{1, {}, {}, {}};
        auto sol = solve_cartan_bd(e, {2, Algebra::sl});
        CartanCoeffs quarter = {{Rational(1, 4), Rational(-1, 4)},
                                {Rational(-1, 4), Rational(1, 4)}};
        add_check(rep, "sl(2) empty triple solves uniquely",
                  sol.contains(quarter, vs) && sol.kernel.empty());
    }
    // sl(3) family and printed tensors per deleted-root case
    Algebra sl3{3, Algebra::sl};
    auto mkAB = [&](Rational cAA, Rational cAB, Rational cBA, Rational cBB) {
        CartanCoeffs c(3, std::vector<Rational>(3, 0));
        Rational A[3] = {1, 0, -1}, B[3] = {0, 1, -1};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                c[a][b] = cAA * A[a] * A[b] + cAB * A[a] * B[b] + cBA * B[a] * A[b] +
                          cBB * B[a] * B[b];
        return c;
    };
    {
        BDTriple e{2, {}, {}, {}};
        auto s = s_admissible_classify(e, 1);
        auto sol = solve_cartan_quasitrig(*s, sl3);
        bool member =
            sol.contains(mkAB(Rational(1, 3), Rational(-1, 6), Rational(-1, 6), Rational(1, 3)),
                         vs);
        add_check(rep, "sl(3) empty case family contains the symmetric member",
                  member && sol.kernel.size() == 1, "one-parameter family");
    }
    {
        BDTriple t{2, {1}, {1}, {{1, 1}}};
        auto s = s_admissible_classify(t, 1);
        auto sol = solve_cartan_quasitrig(*s, sl3);
        add_check(rep, "sl(3) fixed-root case reproduces the printed tensor",
                  s && s->kind == SAdmissible::II &&
                      sol.contains(mkAB(Rational(1, 3), Rational(-1, 3), Rational(0),
                                        Rational(1, 3)),
                                   vs));
    }
    {
        BDTriple t{2, {1}, {2}, {{1, 2}}};
        auto s = s_admissible_classify(t, 1);
        auto sol = solve_cartan_quasitrig(*s, sl3);
        bool ok = s && s->kind == SAdmissible::I &&
                  sol.contains(mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3)),
                               vs);
        add_check(rep, "sl(3) shifted-root case reproduces the printed tensor", ok);
        if (ok) {
            auto lag = reconstruct_ia_prime(
                *s, mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3)), sl3);
            add_check(rep, "Cartan reconstruction identities (shifted-root case)", lag.ok());
        }
    }
    {
        BDTriple t{2, {1, 2}, {1, 2}, {{1, 2}, {2, 1}}};
        auto s = s_admissible_classify(t, 1);
        auto sol = solve_cartan_quasitrig(*s, sl3);
        bool ok = s && s->kind == SAdmissible::II &&
                  sol.contains(mkAB(Rational(1, 3), Rational(0), Rational(-1, 3), Rational(1, 3)),
                               vs);
        add_check(rep, "sl(3) swap case reproduces the printed tensor", ok);
    }
    {
        // the quarter-normalized Cremmer-Gervais Cartan tensor of sl(3); the
        // printed doubled form carries a misprinted wedge weight
        BDTriple cg3{2, {1}, {2}, {{1, 2}}};
        auto sol = solve_cartan_bd(cg3, {3, Algebra::sl});
        auto mkh = [&](Rational c11, Rational c12, Rational c21, Rational c22) {
            CartanCoeffs c(3, std::vector<Rational>(3, 0));
            Rational h1[3] = {1, -1, 0}, h2[3] = {0, 1, -1};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    c[a][b] = c11 * h1[a] * h1[b] + c12 * h1[a] * h2[b] + c21 * h2[a] * h1[b] +
                              c22 * h2[a] * h2[b];
            return c;
        };
        add_check(rep, "sl(3) Cremmer-Gervais Cartan tensor in solution set",
                  sol.contains(mkh(Rational(1, 3), Rational(1, 3), Rational(0), Rational(1, 3)),
                               vs));
    }
    return rep;
}

VerificationReport suite_cg_identities() {
    VerificationReport rep;
    rep.suite = "cg-identities";
    for (int N = 2; N <= 6; ++N) {
        auto r = verify_cg_identities(N);
        add_check(rep, "weight pairing identities N=" + std::to_string(N), r.weights_ok);
        add_check(rep, "pair difference identities N=" + std::to_string(N), r.pair_diffs_ok);
        add_check(rep, "diagram conditions N=" + std::to_string(N), r.bd_conditions_ok);
    }
    return rep;
}

VerificationReport suite_quantum_presentation() {
    VerificationReport rep;
    rep.suite = "quantum-presentation";
    for (int N = 2; N <= 4; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"q", "z1", "z2", "z3", "hbar"});
        QContext ctx = QContext::plain(N, vars);
        bool built = true;
        std::string msg;
        try {
            QRep vec(ctx, false);
            QRep ev(ctx, true);
            auto cw = verify_cw_relations(vec);
            auto ind = verify_cw_independence(vec);
            auto cop = verify_coproduct_properties(ev);
            built = cw.ok() && ind.ok() && cop.ok();
            msg = "cw " + std::to_string(cw.checked) + " checks";
        } catch (const std::exception& e) {
            built = false;
            msg = e.what();
        }
        add_check(rep, "defining and composite relations N=" + std::to_string(N), built, msg,
                  ms_since(t0));
    }
    return rep;
}

VerificationReport suite_qybe() {
    VerificationReport rep;
    rep.suite = "qybe";
    // constant and evaluation universal R for N <= 4
    for (int N = 2; N <= 4; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"q", "z1", "z2", "z3", "hbar"});
        QContext ctx = QContext::plain(N, vars);
        QRep vec(ctx, false);
        MatRF R = universal_r_constant(vec);
        auto rb = [&](const Leg&, const Leg&) { return R; };
        std::vector<Leg> legs{{false, ""}, {false, ""}, {false, ""}};
        bool q1 = qybe_residual(rb, vec, legs).is_zero();
        bool hk = hecke_property(R, vec);
        add_check(rep, "constant R satisfies QYBE and Hecke, N=" + std::to_string(N), q1 && hk,
                  "", ms_since(t0));
        auto t1 = std::chrono::steady_clock::now();
        QRep ev(ctx, true);
        auto rbe = [&](const Leg& a, const Leg& b) {
            return trigonometric_r_evaluation(ev, a.zvar, b.zvar);
        };
        std::vector<Leg> elegs{{true, "z1"}, {true, "z2"}, {true, "z3"}};
        bool q2 = qybe_residual(rbe, ev, elegs).is_zero();
        bool in = affine_intertwining(rbe(elegs[0], elegs[1]), ev, elegs[0], elegs[1]);
        add_check(rep, "evaluation R satisfies QYBE and intertwining, N=" + std::to_string(N),
                  q2 && in, "", ms_since(t1));
    }
    // sl(2) printed R-matrices
    {
        auto vars = VarSet::make({"q", "z1", "z2", "z3", "a", "b", "hbar"});
        QRep ev(QContext::plain(2, vars), true);
        std::vector<Leg> legs{{true, "z1"}, {true, "z2"}, {true, "z3"}};
        auto t0 = std::chrono::steady_clock::now();
        auto rb32 = [&](const Leg& x, const Leg& y) { return r_e32(ev, x.zvar, y.zvar); };
        add_check(rep, "sl(2) trigonometric R", qybe_residual(rb32, ev, legs).is_zero(), "",
                  ms_since(t0));
        auto t1 = std::chrono::steady_clock::now();
        RatFunc a = RatFunc::variable(vars, "a"), b = RatFunc::variable(vars, "b");
        auto rb34 = [&](const Leg& x, const Leg& y) { return r_e34(ev, x.zvar, y.zvar, a, b); };
        add_check(rep, "sl(2) twisted trigonometric R (symbolic a,b)",
                  qybe_residual(rb34, ev, legs).is_zero(), "", ms_since(t1));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"u1", "u2", "u3", "eta", "xi", "hbar"});
        auto r = sl2_rational_check(vars);
        add_check(rep, "sl(2) rational twisted R (symbolic eta,xi)", r.qybe_zero, "",
                  ms_since(t0));
    }
    // rational sl(3) twisted R-matrices from the printed twist products
    for (auto id : {YangianTwistId::long_twist, YangianTwistId::short_twist}) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"u1", "u2", "u3", "zeta", "xi", "hbar"});
        auto r = twisted_rational_R(id, vars);
        add_check(rep,
                  std::string("sl(3) rational twisted R (") +
                      (id == YangianTwistId::long_twist ? "long" : "short") + ")",
                  r.qybe_zero, r.qybe_zero ? "" : "printed twist product fails the exact gate",
                  ms_since(t0));
    }
    return rep;
}

VerificationReport suite_cocycle() {
    VerificationReport rep;
    rep.suite = "cocycle";
    for (int N = 2; N <= 5; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"qh", "z1", "z2", "z3"});
        QContext ctx = QContext::rooted(N, vars);
        QRep vec(ctx, false);
        Twist t;
        t.cartan = cg_cartan_twist(N);
        std::vector<Leg> legs{{false, ""}, {false, ""}, {false, ""}};
        add_check(rep, "Cartan twist cocycle N=" + std::to_string(N),
                  cocycle_residual(t, vec, legs).is_zero(), "", ms_since(t0));
    }
    for (int M = 3; M <= 4; ++M) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"qh", "z1", "z2", "z3"});
        QContext ctx = QContext::rooted(M, vars);
        QRep vec(ctx, false);
        Twist f = cremmer_gervais_twist(ctx);
        std::vector<Leg> legs{{false, ""}, {false, ""}, {false, ""}};
        bool ok = cocycle_residual(f, vec, legs).is_zero();
        Twist bad = f;
        bad.cartan.reset();
        bool tampered_fails = !cocycle_residual(bad, vec, legs).is_zero();
        add_check(rep, "block twist cocycle gl(" + std::to_string(M) + ")", ok && tampered_fails,
                  tampered_fails ? "tampered variant fails" : "tampered variant passed!",
                  ms_since(t0));
    }
    for (int N = 2; N <= 3; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        auto vars = VarSet::make({"qh", "z1", "z2", "z3"});
        QContext ctx = QContext::rooted(N, vars);
        QRep ev(ctx, true);
        Twist f = affine_cremmer_gervais_twist(ctx);
        std::vector<Leg> legs{{true, "z1"}, {true, "z2"}, {true, "z3"}};
        add_check(rep, "current-algebra twist cocycle gl(" + std::to_string(N) + ")[u]",
                  cocycle_residual(f, ev, legs).is_zero(), "", ms_since(t0));
    }
    return rep;
}

VerificationReport suite_semiclassical() {
    VerificationReport rep;
    rep.suite = "semiclassical";
    auto run = [&](const std::string& name, const std::function<std::pair<bool, RatFunc>()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto [ok, val] = f();
            add_check(rep, name, ok, ok ? "scalar " + val.to_string() : "residual not scalar*Id",
                      ms_since(t0));
        } catch (const std::exception& e) {
            add_check(rep, name, false, e.what(), ms_since(t0));
        }
    };
    // shared convention: q = 1 - h/2, parameters (a,b) -> (-h a, -h b),
    // (eta, xi) -> (-h, h xi), zeta -> h zeta with the Yang constant -> h.
    run("sl(2) trigonometric R against the standard entry", [] {
        auto vars = VarSet::make({"q", "z1", "z2", "a", "b", "xi", "hbar"});
        QRep ev(QContext::plain(2, vars), true);
        MatRF r = r_e32(ev, "z1", "z2");
        auto sc = semiclassical_limit(r, ev, catalog_get_symbolic("sl2.X0"), "z1", "z2");
        return std::make_pair(sc.defined && sc.scalar, sc.scalar_value);
    });
    run("sl(2) twisted R against the two-parameter entry", [] {
        auto vars = VarSet::make({"q", "z1", "z2", "a", "b", "xi", "hbar"});
        QRep ev(QContext::plain(2, vars), true);
        RatFunc h = RatFunc::variable(vars, "hbar");
        RatFunc a = RatFunc::variable(vars, "a"), b = RatFunc::variable(vars, "b");
        MatRF r = r_e34(ev, "z1", "z2", a * (-h), b * (-h));
        MatRF rh = r.subst({{"q", RatFunc::one(vars) - h * Rational(1, 2)}}, vars);
        // order-h coefficient against the catalogue tensor
        MatRF rcl(4, 4, vars);
        bool defined = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (rh.at(i, j).is_zero()) {
                    if (i == j) defined = false;
                    continue;
                }
                TruncSeries s = taylor_series(rh.at(i, j), "hbar", 1);
                RatFunc c0 = s.coeff(0);
                if ((i == j && c0 != RatFunc::one(vars)) || (i != j && !c0.is_zero()))
                    defined = false;
                rcl.at(i, j) = s.coeff(1);
            }
        Solution xab = catalog_get_symbolic("sl2.Xab");
        std::map<std::string, RatFunc> bind{{"u", RatFunc::variable(vars, "z1")},
                                            {"v", RatFunc::variable(vars, "z2")},
                                            {"a", a},
                                            {"b", b},
                                            {"xi", RatFunc::zero(vars)},
                                            {"hbar", RatFunc::zero(vars)}};
        MatRF tmat(4, 4, vars);
        Tensor2 full = xab.full_tensor();
        for (const auto& [k, c] : full.entries()) {
            int row = (k[0] - 1) * 2 + (k[2] - 1), col = (k[1] - 1) * 2 + (k[3] - 1);
            tmat.at(row, col) = tmat.at(row, col) + c.subst(bind, vars);
        }
        MatRF diff = rcl - tmat;
        RatFunc d0 = diff.at(0, 0);
        bool scalar = defined;
        for (int i = 0; i < 4 && scalar; ++i)
            for (int j = 0; j < 4 && scalar; ++j) {
                if (i == j && diff.at(i, j) != d0) scalar = false;
                if (i != j && !diff.at(i, j).is_zero()) scalar = false;
            }
        return std::make_pair(scalar, d0);
    });
    run("sl(2) rational twisted R against its rational solution", [] {
        auto vars = VarSet::make({"u1", "u2", "u3", "eta", "xi", "hbar"});
        auto r = sl2_rational_check(vars);
        return std::make_pair(r.semiclassical_scalar, r.semiclassical_value);
    });
    for (auto id : {YangianTwistId::long_twist, YangianTwistId::short_twist}) {
        run(std::string("sl(3) rational twisted R (") +
                (id == YangianTwistId::long_twist ? "long" : "short") + ") against its solution",
            [id] {
                auto vars = VarSet::make({"u1", "u2", "u3", "zeta", "xi", "hbar"});
                auto r = twisted_rational_R(id, vars);
                return std::make_pair(r.semiclassical_scalar, r.semiclassical_value);
            });
    }
    return rep;
}

VerificationReport suite_spin_chains(unsigned long long seed) {
    VerificationReport rep;
    rep.suite = "spin-chains";
    auto vs = chain_vars();
    {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E32;
        spec.sites = 2;
        add_check(rep, "2-site commutativity, symbolic", commute_check_symbolic(spec).zero, "",
                  ms_since(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E34;
        spec.sites = 3;
        spec.params["q"] = RatFunc::variable(vs, "q");
        add_check(rep, "3-site commutativity, symbolic (two-parameter family)",
                  commute_check_symbolic(spec).zero, "", ms_since(t0));
    }
    for (int sites = 4; sites <= 5; ++sites) {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E34;
        spec.sites = sites;
        auto c = commute_check_sampled(spec, 5, seed + sites);
        add_check(rep, std::to_string(sites) + "-site commutativity at 5 sample pairs", c.zero,
                  std::to_string(c.samples_checked) + " pairs", ms_since(t0));
    }
    // Hamiltonian comparisons at three random rational parameter points
    unsigned long long state = seed;
    for (int trial = 0; trial < 3; ++trial) {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E34;
        spec.sites = 3;
        spec.params["q"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["z2"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["a"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["b"] = RatFunc::constant(vs, sample_prime(state));
        auto gap = hamiltonian_scalar_gap(spec);
        add_check(rep, "two-parameter Hamiltonian equals closed form, point " +
                           std::to_string(trial + 1),
                  gap.scalar, gap.scalar ? "shift " + gap.value.to_string() : "non-scalar gap",
                  ms_since(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E41;
        spec.sites = 3;
        spec.params["eta"] = RatFunc::variable(vs, "eta");
        spec.params["xi"] = RatFunc::variable(vs, "xi");
        spec.params["z2"] = RatFunc::variable(vs, "z2");
        auto gap = hamiltonian_scalar_gap(spec);
        // the closed form constants are exactly the rational-limit ones
        auto [C, D] = hamiltonian_constants(spec);
        RatFunc eta = RatFunc::variable(vs, "eta"), xi = RatFunc::variable(vs, "xi"),
                z2v = RatFunc::variable(vs, "z2");
        bool constants_ok = (C == -(xi * eta) * Rational(1, 2)) &&
                            (D == xi * xi * z2v * (z2v - eta));
        add_check(rep, "rational-limit Hamiltonian matches its closed form symbolically",
                  gap.scalar && constants_ok,
                  gap.scalar ? "shift " + gap.value.to_string() : "non-scalar gap",
                  ms_since(t0));
    }
    {
        auto t0 = std::chrono::steady_clock::now();
        ChainSpec spec;
        spec.family = ChainSpec::E34;
        spec.sites = 3;
        spec.params["q"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["z2"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["a"] = RatFunc::constant(vs, sample_prime(state));
        spec.params["b"] = RatFunc::constant(vs, sample_prime(state));
        add_check(rep, "closed-form Hamiltonian commutes with the transfer matrix",
                  integrability_smoke(spec, 3, state), "", ms_since(t0));
    }
    return rep;
}

VerificationReport suite_seaweed() {
    VerificationReport rep;
    rep.suite = "seaweed";
    for (int N = 2; N <= 3; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = seaweed_iso_check(N);
        add_check(rep, "block realization and twisted coproducts N=" + std::to_string(N), r.ok(),
                  r.ok() ? std::to_string(r.checked) + " checks" : r.first_failure, ms_since(t0));
    }
    return rep;
}

VerificationReport suite_pde(unsigned long long seed) {
    VerificationReport rep;
    rep.suite = "pde";
    for (const auto& id : catalog_ids()) {
        Solution s = catalog_get_symbolic(id);
        if (s.kind != Solution::quasi_trigonometric) continue;
        auto t0 = std::chrono::steady_clock::now();
        add_check(rep, "scaling identity " + id, pde_residual(s).is_zero(), "", ms_since(t0));
    }
    (void)seed;
    {
        auto t0 = std::chrono::steady_clock::now();
        for (const char* id : {"sl2.X0", "sl2.X1"}) {
            Solution s = catalog_get_symbolic(id);
            auto r = psi_ode_probe(s, {{2.0, 0.5}, {3.0, 1.5}}, 1e-8);
            CheckRecord c;
            c.name = std::string("numeric holonomy probe ") + id;
            c.status = r.pass ? CheckRecord::pass
                              : (r.inconclusive ? CheckRecord::inconclusive : CheckRecord::fail);
            c.residual = "max deviation " + std::to_string(r.max_deviation);
            c.wall_ms = ms_since(t0);
            rep.checks.push_back(c);
        }
    }
    return rep;
}

} // namespace ybe
