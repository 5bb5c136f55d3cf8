#pragma once

#include "json.hpp"

#include "ybe/bd.hpp"
#include "ybe/matrix.hpp"
#include "ybe/solutions.hpp"

namespace ybe {

using Json = nlohmann::ordered_json;

// {"vars": [...], "num": [[exps, "p/q"], ...], "den": [...]}  (den expanded)
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"algebra": {"N": n, "kind": "sl"}, "entries": [[i,j,k,l, ratfunc], ...]}
Json tensor_to_json(const Tensor2& t);
Tensor2 tensor_from_json(const Json& j);

// tensor schema extended with {"kind", "id", "params"}
Json solution_to_json(const Solution& s);
Solution solution_from_json(const Json& j);

// {"rank": r, "g1": [...], "g2": [...], "tau": [[i,j], ...]}
Json bd_triple_to_json(const BDTriple& t);
BDTriple bd_triple_from_json(const Json& j);

// {"legs": [{"dim": n, "var": "z1"}, ...], "entries": [[r, c, ratfunc], ...]}
Json matrix_to_json(const MatRF& m, const std::vector<std::pair<int, std::string>>& legs);
MatRF matrix_from_json(const Json& j);

} // namespace ybe
