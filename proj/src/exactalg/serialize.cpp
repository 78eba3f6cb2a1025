#include "modrec/serialize.hpp"

#include "modrec/errors.hpp"

namespace modrec {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Poly& p) {
  auto vars = p.variables();
  if (vars.size() <= 1) {
    Var v = vars.empty() ? Var::t : vars.front();
    Json coeffs = Json::array();
    for (const auto& c : p.dense(v)) coeffs.push_back(to_string(c));
    return Json{{"var", std::string(var_name(v))}, {"coeffs", coeffs}};
  }
  Json names = Json::array();
  for (Var v : vars) names.push_back(std::string(var_name(v)));
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (Var v : vars) exp.push_back(e[static_cast<std::size_t>(v)]);
    terms.push_back(Json{{"exp", exp}, {"coeff", to_string(c)}});
  }
  return Json{{"vars", names}, {"terms", terms}};
}

Json to_json(const RatFun& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients())
    coeffs.push_back(c.is_constant() ? Json(to_string(c.constant_value())) : to_json(c));
  return Json{{"var", std::string(var_name(s.var()))}, {"order", s.order()}, {"coeffs", coeffs}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ValidationError("expected a rational as a \"p/q\" string, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("expected a polynomial object, got " + j.dump());
  if (j.contains("coeffs")) {
    Var v = parse_var(j.at("var").get<std::string>());
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Poly::univariate(v, coeffs);
  }
  if (!j.contains("vars") || !j.contains("terms"))
    throw ValidationError("polynomial object needs either coeffs or vars/terms");
  std::vector<Var> vars;
  for (const auto& name : j.at("vars")) vars.push_back(parse_var(name.get<std::string>()));
  Poly p;
  for (const auto& term : j.at("terms")) {
    const auto& exp = term.at("exp");
    if (exp.size() != vars.size()) throw ValidationError("exponent vector length mismatch");
    Exponents e{};
    for (std::size_t i = 0; i < vars.size(); ++i)
      e[static_cast<std::size_t>(vars[i])] = exp[i].get<std::uint32_t>();
    p += Poly::monomial(rational_from_json(term.at("coeff")), e);
  }
  return p;
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ValidationError("expected a rational function {num, den}, got " + j.dump());
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace modrec
