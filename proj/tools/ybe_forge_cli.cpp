#include "CLI11.hpp"

#include "ybe/bd.hpp"
#include "ybe/cybe.hpp"
#include "ybe/io.hpp"
#include "ybe/ode_probe.hpp"
#include "ybe/oracle.hpp"
#include "ybe/pde.hpp"
#include "ybe/suites.hpp"
#include "ybe/yangian.hpp"
#include "ybe/chain.hpp"

#include <fstream>
#include <iostream>

using namespace ybe;

namespace {

int emit(const VerificationReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_text();
    return rep.exit_code();
}

Solution get_or_die(const std::string& id) {
    return catalog_get_symbolic(id);   // throws on unknown id
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for classical and quantum Yang-Baxter structures"};
    app.require_subcommand(1);

    unsigned long long seed = 20240801;
    std::string format = "text";
    int cutoff = 0;
    std::string mode = "symbolic";
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cutoff", cutoff, "half-loop basis depth override");
    app.add_option("--mode", mode, "symbolic|sampled")->check(CLI::IsMember({"symbolic", "sampled"}));

    // catalog list | show <id>
    auto* cat = app.add_subcommand("catalog", "catalogued solutions");
    auto* cat_list = cat->add_subcommand("list", "list catalog ids");
    std::string show_id;
    auto* cat_show = cat->add_subcommand("show", "print one solution as JSON");
    cat_show->add_option("id", show_id)->required();

    // verify cybe|unitarity|oracle|pde [id]
    auto* ver = app.add_subcommand("verify", "exact residual checks");
    std::string ver_what, ver_id;
    ver->add_option("what", ver_what, "cybe|unitarity|oracle|pde")->required();
    ver->add_option("id", ver_id, "catalog id (all when omitted)");

    // bd enumerate|solve|cg-identities
    auto* bd = app.add_subcommand("bd", "diagram combinatorics and Cartan solvers");
    auto* bd_enum = bd->add_subcommand("enumerate", "enumerate admissible triples");
    int bd_rank = 2;
    bool bd_sadm = false;
    int bd_alpha = 1;
    bd_enum->add_option("--rank", bd_rank)->required();
    bd_enum->add_flag("--s-admissible", bd_sadm, "classify against a deleted root");
    bd_enum->add_option("--alpha", bd_alpha, "deleted root index");
    auto* bd_solve = bd->add_subcommand("solve", "solve the Cartan system of a triple");
    std::string bd_triple_json;
    std::string bd_alg = "gl";
    bd_solve->add_option("--triple", bd_triple_json, "triple as JSON")->required();
    bd_solve->add_option("--algebra", bd_alg, "gl|sl");
    auto* bd_cg = bd->add_subcommand("cg-identities", "closed-form identity checks");
    int bd_n = 4;
    bd_cg->add_option("--n", bd_n);

    // twist cocycle|qybe
    auto* tw = app.add_subcommand("twist", "quantum twist checks");
    std::string tw_what;
    tw->add_option("what", tw_what, "cocycle|qybe")->required();

    // yangian verify
    auto* ya = app.add_subcommand("yangian", "rational twist checks");
    auto* ya_ver = ya->add_subcommand("verify", "QYBE and semiclassical reports");
    std::string ya_id = "sl2";
    ya_ver->add_option("--id", ya_id, "long|short|sl2");

    // chain hamiltonian|commute
    auto* ch = app.add_subcommand("chain", "transfer matrices and Hamiltonians");
    std::string ch_what;
    ch->add_option("what", ch_what, "hamiltonian|commute")->required();
    std::string ch_family = "E34";
    int ch_sites = 3;
    std::string ch_a, ch_b, ch_q, ch_z2, ch_eta, ch_xi;
    ch->add_option("--family", ch_family, "E32|E34|E41");
    ch->add_option("--sites", ch_sites);
    ch->add_option("--a", ch_a);
    ch->add_option("--b", ch_b);
    ch->add_option("--q", ch_q);
    ch->add_option("--z2", ch_z2);
    ch->add_option("--eta", ch_eta);
    ch->add_option("--xi", ch_xi);

    // export <id> <path>
    auto* ex = app.add_subcommand("export", "write an object to a JSON file");
    std::string ex_id, ex_path;
    ex->add_option("id", ex_id)->required();
    ex->add_option("path", ex_path)->required();

    // report: run every suite
    auto* rp = app.add_subcommand("report", "run all verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cat_list) {
            for (const auto& id : catalog_ids()) std::cout << id << "\n";
            return 0;
        }
        if (*cat_show) {
            std::cout << solution_to_json(get_or_die(show_id)).dump(2) << "\n";
            return 0;
        }
        if (*ver) {
            VerificationReport rep;
            if (!ver_id.empty()) {
                rep.suite = "verify-" + ver_what;
                rep.seed = seed;
                Solution s = get_or_die(ver_id);
                if (ver_what == "cybe")
                    add_check(rep, "cybe " + ver_id, cybe_residual(s).is_zero());
                else if (ver_what == "unitarity")
                    add_check(rep, "unitarity " + ver_id, unitarity_residual(s).is_zero());
                else if (ver_what == "oracle") {
                    int use = cutoff;
                    if (use == 0) {
                        std::size_t ui = s.vars->index("u"), vi = s.vars->index("v");
                        for (const auto& [k, c] : s.poly_part.entries())
                            for (const auto& [m, cc] : c.num().terms())
                                use = std::max(use, m[ui] + m[vi]);
                        use += 1;
                    }
                    auto o = subalgebra_oracle(s, use);
                    add_check(rep, "oracle " + ver_id, o.pass, o.witness);
                } else if (ver_what == "pde")
                    add_check(rep, "scaling identity " + ver_id, pde_residual(s).is_zero());
                else {
                    std::cerr << "unknown verification: " << ver_what << "\n";
                    return 2;
                }
            } else if (ver_what == "cybe")
                rep = suite_cybe();
            else if (ver_what == "unitarity")
                rep = suite_unitarity();
            else if (ver_what == "oracle")
                rep = suite_oracle(seed);
            else if (ver_what == "pde")
                rep = suite_pde(seed);
            else {
                std::cerr << "unknown verification: " << ver_what << "\n";
                return 2;
            }
            rep.seed = seed;
            return emit(rep, format);
        }
        if (*bd_enum) {
            auto triples = enumerate_bd(bd_rank);
            Json out = Json::array();
            for (const auto& t : triples) {
                Json j = bd_triple_to_json(t);
                if (bd_sadm) {
                    std::string why;
                    auto s = s_admissible_classify(t, bd_alpha, &why);
                    j["s_admissible"] =
                        s ? (s->kind == SAdmissible::I ? "case I" : "case II") : "reject: " + why;
                }
                out.push_back(j);
            }
            if (format == "json")
                std::cout << out.dump(2) << "\n";
            else
                for (const auto& j : out) std::cout << j.dump() << "\n";
            return 0;
        }
        if (*bd_solve) {
            BDTriple t = bd_triple_from_json(Json::parse(bd_triple_json));
            Algebra alg{t.rank + 1, bd_alg == "sl" ? Algebra::sl : Algebra::gl};
            auto sol = solve_cartan_bd(t, alg);
            Json j;
            Json part = Json::array();
            for (const auto& row : sol.particular) {
                Json r = Json::array();
                for (const auto& c : row) r.push_back(rat_to_string(c));
                part.push_back(r);
            }
            j["particular"] = part;
            j["kernel_dimension"] = sol.kernel.size();
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*bd_cg) {
            VerificationReport rep;
            rep.suite = "cg-identities";
            rep.seed = seed;
            auto r = verify_cg_identities(bd_n);
            add_check(rep, "weight pairings", r.weights_ok);
            add_check(rep, "pair differences", r.pair_diffs_ok);
            add_check(rep, "diagram conditions", r.bd_conditions_ok);
            return emit(rep, format);
        }
        if (*tw) {
            VerificationReport rep = tw_what == "cocycle" ? suite_cocycle() : suite_qybe();
            rep.seed = seed;
            return emit(rep, format);
        }
        if (*ya_ver) {
            VerificationReport rep;
            rep.suite = "yangian";
            rep.seed = seed;
            if (ya_id == "sl2") {
                auto vars = VarSet::make({"u1", "u2", "u3", "eta", "xi", "hbar"});
                auto r = sl2_rational_check(vars);
                add_check(rep, "QYBE", r.qybe_zero);
                add_check(rep, "semiclassical residual scalar", r.semiclassical_scalar,
                          r.semiclassical_scalar ? r.semiclassical_value.to_string() : "");
            } else {
                auto vars = VarSet::make({"u1", "u2", "u3", "zeta", "xi", "hbar"});
                auto id = ya_id == "long" ? YangianTwistId::long_twist : YangianTwistId::short_twist;
                auto r = twisted_rational_R(id, vars);
                add_check(rep, "QYBE", r.qybe_zero);
                add_check(rep, "semiclassical residual scalar", r.semiclassical_scalar);
            }
            return emit(rep, format);
        }
        if (*ch) {
            auto vs = chain_vars();
            ChainSpec spec;
            spec.sites = ch_sites;
            spec.family = ch_family == "E32" ? ChainSpec::E32
                                             : (ch_family == "E41" ? ChainSpec::E41 : ChainSpec::E34);
            auto bindp = [&](const char* name, const std::string& text) {
                if (!text.empty())
                    spec.params[name] = RatFunc::constant(vs, rat_parse(text));
            };
            bindp("a", ch_a);
            bindp("b", ch_b);
            bindp("q", ch_q);
            bindp("z2", ch_z2);
            bindp("eta", ch_eta);
            bindp("xi", ch_xi);
            VerificationReport rep;
            rep.suite = "chain-" + ch_what;
            rep.seed = seed;
            if (ch_what == "hamiltonian") {
                auto gap = hamiltonian_scalar_gap(spec);
                add_check(rep, "closed form matches up to a scalar shift", gap.scalar,
                          gap.scalar ? "shift " + gap.value.to_string() : "");
                if (format == "text" && gap.scalar) {
                    auto [C, D] = hamiltonian_constants(spec);
                    std::cout << "C = " << C.to_string() << "\nD = " << D.to_string() << "\n";
                }
            } else if (ch_what == "commute") {
                if (mode == "symbolic") {
                    add_check(rep, "transfer matrices commute (symbolic)",
                              commute_check_symbolic(spec).zero);
                } else {
                    auto c = commute_check_sampled(spec, 5, seed);
                    add_check(rep, "transfer matrices commute (sampled)", c.zero,
                              std::to_string(c.samples_checked) + " pairs");
                }
            } else {
                std::cerr << "unknown chain check: " << ch_what << "\n";
                return 2;
            }
            return emit(rep, format);
        }
        if (*ex) {
            std::ofstream out(ex_path);
            if (!out) {
                std::cerr << "cannot open " << ex_path << "\n";
                return 2;
            }
            out << solution_to_json(get_or_die(ex_id)).dump(2) << "\n";
            return 0;
        }
        if (*rp) {
            VerificationReport all;
            all.suite = "full-report";
            all.seed = seed;
            for (auto* f : {&suite_cybe, &suite_unitarity, &suite_bd_enumeration,
                            &suite_cartan_solvers, &suite_cg_identities,
                            &suite_quantum_presentation, &suite_cocycle, &suite_seaweed})
                all.merge((*f)());
            all.merge(suite_oracle(seed));
            all.merge(suite_pde(seed));
            all.merge(suite_qybe());
            all.merge(suite_semiclassical());
            all.merge(suite_spin_chains(seed));
            return emit(all, format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
