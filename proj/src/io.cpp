#include "ybe/io.hpp"

#include <stdexcept>

namespace ybe {

namespace {

Json terms_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exps = Json::array();
        for (int e : m) exps.push_back(e);
        arr.push_back(Json::array({exps, rat_to_string(c)}));
    }
    return arr;
}

Poly terms_from_json(const VarSetPtr& vars, const Json& arr) {
    Poly p(vars);
    for (const auto& t : arr) {
        Mono m;
        for (const auto& e : t.at(0)) m.push_back(e.get<int>());
        p.add_term(m, rat_parse(t.at(1).get<std::string>()));
    }
    return p;
}

VarSetPtr vars_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& v : j) names.push_back(v.get<std::string>());
    return VarSet::make(std::move(names));
}

} // namespace

Json ratfunc_to_json(const RatFunc& f) {
    Json j;
    j["vars"] = f.vars()->names();
    j["num"] = terms_to_json(f.num());
    j["den"] = terms_to_json(f.den_expanded());
    return j;
}

RatFunc ratfunc_from_json(const Json& j) {
    VarSetPtr vars = vars_from_json(j.at("vars"));
    Poly num = terms_from_json(vars, j.at("num"));
    Poly den = terms_from_json(vars, j.at("den"));
    if (den.is_one()) return RatFunc(num);
    return RatFunc(num, den);
}

Json poly_to_json(const Poly& p) { return ratfunc_to_json(RatFunc(p)); }

Poly poly_from_json(const Json& j) {
    RatFunc f = ratfunc_from_json(j);
    if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial");
    return f.num();
}

Json tensor_to_json(const Tensor2& t) {
    Json j;
    j["algebra"] = {{"N", t.algebra().N},
                    {"kind", t.algebra().kind == Algebra::sl ? "sl" : "gl"}};
    Json entries = Json::array();
    for (const auto& [k, c] : t.entries())
        entries.push_back(Json::array({k[0], k[1], k[2], k[3], ratfunc_to_json(c)}));
    j["entries"] = entries;
    return j;
}

Tensor2 tensor_from_json(const Json& j) {
    Algebra a;
    a.N = j.at("algebra").at("N").get<int>();
    a.kind = j.at("algebra").at("kind").get<std::string>() == "sl" ? Algebra::sl : Algebra::gl;
    VarSetPtr vars;
    Tensor2 t;
    for (const auto& e : j.at("entries")) {
        RatFunc c = ratfunc_from_json(e.at(4));
        if (!vars) {
            vars = c.vars();
            t = Tensor2(a, vars);
        }
        t.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>(), c);
    }
    if (!vars) t = Tensor2(a, solution_vars());
    return t;
}

Json solution_to_json(const Solution& s) {
    Json j;
    j["id"] = s.id;
    j["kind"] = s.kind == Solution::rational ? "rational" : "quasi_trigonometric";
    Json params = Json::object();
    for (const auto& [k, v] : s.params) params[k] = ratfunc_to_json(v);
    j["params"] = params;
    j["algebra"] = {{"N", s.alg.N}, {"kind", s.alg.kind == Algebra::sl ? "sl" : "gl"}};
    j["pole_numerator"] = tensor_to_json(s.pole_numerator);
    j["poly_part"] = tensor_to_json(s.poly_part);
    return j;
}

Solution solution_from_json(const Json& j) {
    Solution s;
    s.id = j.at("id").get<std::string>();
    s.kind = j.at("kind").get<std::string>() == "rational" ? Solution::rational
                                                           : Solution::quasi_trigonometric;
    s.alg.N = j.at("algebra").at("N").get<int>();
    s.alg.kind =
        j.at("algebra").at("kind").get<std::string>() == "sl" ? Algebra::sl : Algebra::gl;
    s.pole_numerator = tensor_from_json(j.at("pole_numerator"));
    s.poly_part = tensor_from_json(j.at("poly_part"));
    s.vars = s.poly_part.vars() ? s.poly_part.vars() : solution_vars();
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = ratfunc_from_json(v);
    return s;
}

Json bd_triple_to_json(const BDTriple& t) {
    Json j;
    j["rank"] = t.rank;
    j["g1"] = t.gamma1;
    j["g2"] = t.gamma2;
    Json tau = Json::array();
    for (const auto& [a, b] : t.tau) tau.push_back(Json::array({a, b}));
    j["tau"] = tau;
    return j;
}

BDTriple bd_triple_from_json(const Json& j) {
    BDTriple t;
    t.rank = j.at("rank").get<int>();
    for (const auto& v : j.at("g1")) t.gamma1.push_back(v.get<int>());
    for (const auto& v : j.at("g2")) t.gamma2.push_back(v.get<int>());
    for (const auto& p : j.at("tau")) t.tau.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return t;
}

Json matrix_to_json(const MatRF& m, const std::vector<std::pair<int, std::string>>& legs) {
    Json j;
    Json lj = Json::array();
    for (const auto& [dim, var] : legs) lj.push_back({{"dim", dim}, {"var", var}});
    j["legs"] = lj;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero())
                entries.push_back(Json::array({r, c, ratfunc_to_json(m.at(r, c))}));
    j["entries"] = entries;
    return j;
}

MatRF matrix_from_json(const Json& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    VarSetPtr vars;
    MatRF m;
    for (const auto& e : j.at("entries")) {
        RatFunc c = ratfunc_from_json(e.at(2));
        if (!vars) {
            vars = c.vars();
            m = MatRF(rows, cols, vars);
        }
        m.at(e.at(0).get<int>(), e.at(1).get<int>()) = c;
    }
    if (!vars) m = MatRF(rows, cols, VarSet::make({}));
    return m;
}

} // namespace ybe
