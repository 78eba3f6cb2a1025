#pragma once

#include <json.hpp>

#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"
#include "modrec/series.hpp"

namespace modrec {

using Json = nlohmann::json;

// Univariate (or constant) polynomials:
//   {"var": "t", "coeffs": ["1", "4", "1/2"]}
// Multivariate polynomials:
//   {"vars": ["u","v"], "terms": [{"exp": [1,0], "coeff": "2"}, ...]}
// Rational functions: {"num": <poly>, "den": <poly>}
Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const RatFun& f);
Json to_json(const Series& s);

Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);

}  // namespace modrec
