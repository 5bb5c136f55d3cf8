#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybe/bd.hpp"
#include "ybe/chain.hpp"
#include "ybe/cybe.hpp"
#include "ybe/io.hpp"
#include "ybe/oracle.hpp"
#include "ybe/pde.hpp"
#include "ybe/suites.hpp"
#include "ybe/yangian.hpp"

namespace py = pybind11;
using namespace ybe;

namespace {

std::string report_json(const VerificationReport& r) { return r.to_json().dump(2); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification workbench for classical and quantum Yang-Baxter structures";

    m.def("catalog_ids", [] { return catalog_ids(); });
    m.def("catalog_json", [](const std::string& id) {
        return solution_to_json(catalog_get_symbolic(id)).dump(2);
    });
    m.def("cybe_residual_is_zero", [](const std::string& id) {
        return cybe_residual(catalog_get_symbolic(id)).is_zero();
    });
    m.def("unitarity_residual_is_zero", [](const std::string& id) {
        return unitarity_residual(catalog_get_symbolic(id)).is_zero();
    });
    m.def("quasi_constant", [](const std::string& id) {
        return quasi_constant_test(catalog_get_symbolic(id));
    });
    m.def("subalgebra_oracle_passes", [](const std::string& id, int cutoff) {
        return subalgebra_oracle(catalog_get_symbolic(id), cutoff).pass;
    });
    m.def("scaling_identity_is_zero", [](const std::string& id) {
        return pde_residual(catalog_get_symbolic(id)).is_zero();
    });

    m.def("enumerate_bd_count", [](int rank) { return enumerate_bd(rank).size(); });
    m.def("bd_triples_json", [](int rank) {
        Json out = Json::array();
        for (const auto& t : enumerate_bd(rank)) out.push_back(bd_triple_to_json(t));
        return out.dump(2);
    });

    m.def("sl2_rational_qybe_zero", [] {
        auto vars = VarSet::make({"u1", "u2", "u3", "eta", "xi", "hbar"});
        return sl2_rational_check(vars).qybe_zero;
    });

    m.def("chain_commute_sampled",
          [](const std::string& family, int sites, int pairs, unsigned long long seed) {
              ChainSpec spec;
              spec.sites = sites;
              spec.family = family == "E32" ? ChainSpec::E32
                                            : (family == "E41" ? ChainSpec::E41 : ChainSpec::E34);
              return commute_check_sampled(spec, pairs, seed).zero;
          });
    m.def("chain_hamiltonian_gap_scalar",
          [](const std::string& family, int sites, const std::string& q, const std::string& z2,
             const std::string& a, const std::string& b) {
              auto vs = chain_vars();
              ChainSpec spec;
              spec.sites = sites;
              spec.family = family == "E32" ? ChainSpec::E32
                                            : (family == "E41" ? ChainSpec::E41 : ChainSpec::E34);
              auto bind = [&](const char* n, const std::string& text) {
                  if (!text.empty()) spec.params[n] = RatFunc::constant(vs, rat_parse(text));
              };
              bind("q", q);
              bind("z2", z2);
              bind("a", a);
              bind("b", b);
              auto gap = hamiltonian_scalar_gap(spec);
              return py::make_tuple(gap.scalar, gap.scalar ? gap.value.to_string() : "");
          });

    m.def("suite", [](const std::string& name, unsigned long long seed) {
        if (name == "cybe") return report_json(suite_cybe());
        if (name == "unitarity") return report_json(suite_unitarity());
        if (name == "oracle") return report_json(suite_oracle(seed));
        if (name == "bd") return report_json(suite_bd_enumeration());
        if (name == "cartan") return report_json(suite_cartan_solvers());
        if (name == "cg") return report_json(suite_cg_identities());
        if (name == "presentation") return report_json(suite_quantum_presentation());
        if (name == "qybe") return report_json(suite_qybe());
        if (name == "cocycle") return report_json(suite_cocycle());
        if (name == "semiclassical") return report_json(suite_semiclassical());
        if (name == "chains") return report_json(suite_spin_chains(seed));
        if (name == "seaweed") return report_json(suite_seaweed());
        if (name == "pde") return report_json(suite_pde(seed));
        throw std::invalid_argument("unknown suite: " + name);
    });
}
