#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrec/errors.hpp"
#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"
#include "modrec/serialize.hpp"
#include "modrec/series.hpp"

using namespace modrec;

namespace {

const Poly t = Poly::variable(Var::t);
const Poly u = Poly::variable(Var::u);
const Poly v = Poly::variable(Var::v);

// Long division of dense power series, independent of series_expand.
std::vector<Rational> long_division(std::vector<Rational> num, const std::vector<Rational>& den,
                                    unsigned order) {
  num.resize(order + den.size() + 1);
  std::vector<Rational> out;
  for (unsigned k = 0; k <= order; ++k) {
    Rational c = num[k] / den[0];
    out.push_back(c);
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  return out;
}

std::vector<Rational> coeffs(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

Poly random_poly(std::mt19937& rng, const std::vector<Var>& vars, int max_deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Poly p;
  for (int k = 0; k < 4; ++k) {
    Poly m(coeff(rng));
    for (Var var : vars) m *= Poly::variable(var, static_cast<unsigned>(deg(rng)));
    p += m;
  }
  return p;
}

RatFun random_ratfun(std::mt19937& rng, const std::vector<Var>& vars) {
  Poly den;
  while (den.is_zero()) den = random_poly(rng, vars, 2);
  return RatFun(random_poly(rng, vars, 3), den);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-75")) == "-75");
  CHECK(to_string(pow(Rational(2), -3)) == "1/8");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
  CHECK_THROWS_AS(pow(Rational(0), -1), ValidationError);
}

TEST_CASE("ratfun_arith examples") {
  RatFun a(Poly(1), 1 - t);
  RatFun b(Poly(-1), 1 - t);
  CHECK((a + b).is_zero());
  CHECK((a + b) == RatFun(0));

  RatFun c(1 - t.pow(2), 1 - t);
  CHECK(c * RatFun(1) == RatFun(1 + t));

  RatFun d((1 + t).pow(4), 1 - t.pow(2));
  RatFun quotient = d / RatFun(1 + t);
  CHECK(quotient == RatFun((1 + t).pow(2), 1 - t));
  // Both sides expanded to order 6 by independent long division.
  auto lhs = long_division((1 + t).pow(3).dense(Var::t), (1 - t.pow(2)).dense(Var::t), 6);
  auto rhs = long_division((1 + t).pow(2).dense(Var::t), (1 - t).dense(Var::t), 6);
  CHECK(lhs == rhs);
  auto got = series_expand(quotient, Var::t, 6);
  for (unsigned k = 0; k <= 6; ++k) CHECK(got.rational_coefficient(k) == rhs[k]);

  CHECK_THROWS_AS(a / RatFun(0), ValidationError);
  CHECK_THROWS_AS(RatFun(t, Poly()), ValidationError);
}

TEST_CASE("canonical form fixes the denominator") {
  RatFun f(2 * t, 4 - 2 * t.pow(2));
  CHECK(f.den().leading_coefficient() > 0);
  CHECK(rational_content(f.den()) == 1);
  RatFun g(-t, t.pow(2) - 2);
  CHECK(f == g);
}

TEST_CASE("series_expand examples") {
  RatFun geo(Poly(1), 1 - t);
  auto s = series_expand(geo, Var::t, 3);
  for (unsigned k = 0; k <= 3; ++k) CHECK(s.rational_coefficient(k) == 1);
  CHECK(series_expand(geo, Var::t, 0).coefficients().size() == 1);

  RatFun f((1 + t).pow(4), 1 - t.pow(2));
  auto oracle = long_division((1 + t).pow(4).dense(Var::t), (1 - t.pow(2)).dense(Var::t), 2);
  CHECK(oracle == coeffs({1, 4, 7}));
  auto e = series_expand(f, Var::t, 2);
  for (unsigned k = 0; k <= 2; ++k) CHECK(e.rational_coefficient(k) == oracle[k]);

  CHECK_THROWS_AS(series_expand(RatFun(Poly(1), t), Var::t, 3), ValidationError);
}

TEST_CASE("series with polynomial coefficients") {
  // 1/((1-x)(1-x u v)) has coefficient of x^2 equal to 1 + uv + (uv)^2.
  Poly x = Poly::variable(Var::x);
  RatFun f(Poly(1), (1 - x) * (1 - x * u * v));
  auto s = series_expand(f, Var::x, 2);
  CHECK(s.coefficient(2) == 1 + u * v + (u * v).pow(2));
}

TEST_CASE("substitute examples") {
  Poly q = Poly::variable(Var::q);
  Poly x = Poly::variable(Var::x);
  CHECK(substitute(q - 1, {{Var::q, RatFun(t.pow(2))}}) == RatFun(t.pow(2) - 1));
  auto value = substitute(1 + 4 * x.pow(4), {{Var::x, RatFun(Rational(1, 4))}});
  CHECK(value.constant_value() == Rational(65, 64));
  auto f = substitute(RatFun(q, q - 1), {{Var::q, RatFun(t.pow(2))}});
  CHECK(f == RatFun(t.pow(2), t.pow(2) - 1));
  CHECK_THROWS_AS(substitute(RatFun(Poly(1), q - 1), {{Var::q, RatFun(1)}}), ValidationError);
}

TEST_CASE("is_palindrome examples") {
  CHECK(is_palindrome(1 + t.pow(2), 2));
  CHECK(is_palindrome(1 + t.pow(2) + 4 * t.pow(3) + t.pow(4) + t.pow(6), 6));
  CHECK_FALSE(is_palindrome(1 + 2 * t, 2));
  CHECK_THROWS_AS(is_palindrome(t.pow(3), 2), ValidationError);
}

TEST_CASE("multivariate gcd") {
  Poly a = (u + v) * (u - 1) * (v + 2);
  Poly b = (u + v).pow(2) * (v + 2) * (u * v + 3);
  CHECK(gcd(a, b) == (u + v) * (v + 2));
  CHECK(gcd(u * u - v * v, u - v) == u - v);
  CHECK(gcd(2 * t + 2, 4 * t * t - 4) == t + 1);
  CHECK(gcd(u + 1, v + 1) == Poly(1));
  CHECK(divide_exact(a, u + v) == (u - 1) * (v + 2));
  CHECK_THROWS_AS(divide_exact(a, u + 2), ValidationError);
}

TEST_CASE("ring axioms hold on random rational functions") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Var> vars = trial % 2 == 0 ? std::vector<Var>{Var::t}
                                          : std::vector<Var>{Var::u, Var::v};
    RatFun a = random_ratfun(rng, vars);
    RatFun b = random_ratfun(rng, vars);
    RatFun c = random_ratfun(rng, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RatFun(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Normalization is idempotent.
    CHECK(RatFun(a.num(), a.den()) == a);
  }
}

TEST_CASE("series expansion is multiplicative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Poly da = 1 + t * random_poly(rng, {Var::t}, 3);
    Poly db = 1 + t * random_poly(rng, {Var::t}, 3);
    RatFun a(random_poly(rng, {Var::t}, 4), da);
    RatFun b(random_poly(rng, {Var::t}, 4), db);
    if (a.den().coefficients_in(Var::t)[0].is_zero() || b.den().coefficients_in(Var::t)[0].is_zero())
      continue;
    CHECK(series_expand(a * b, Var::t, 12) ==
          series_expand(a, Var::t, 12) * series_expand(b, Var::t, 12));
  }
}

TEST_CASE("substitute commutes with expansion for polynomial bindings") {
  std::mt19937 rng(11);
  Poly x = Poly::variable(Var::x);
  for (int trial = 0; trial < 20; ++trial) {
    Poly num = random_poly(rng, {Var::x, Var::u}, 3);
    Poly den = 1 + x * random_poly(rng, {Var::x}, 2);
    RatFun f(num, den);
    if (f.den().coefficients_in(Var::x)[0].is_zero()) continue;
    Poly binding = random_poly(rng, {Var::t}, 2);
    Bindings b{{Var::u, RatFun(binding)}};
    Series substituted_first = series_expand(substitute(f, b), Var::x, 8);
    Series expanded_first = series_expand(f, Var::x, 8).map_coefficients(
        [&](const Poly& c) { return substitute(c, b).as_poly(); });
    CHECK(substituted_first == expanded_first);
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Var> vars = trial % 2 == 0 ? std::vector<Var>{Var::t}
                                          : std::vector<Var>{Var::u, Var::v};
    RatFun f = random_ratfun(rng, vars);
    CHECK(ratfun_from_json(Json::parse(to_json(f).dump())) == f);
  }
  Json j = to_json(1 + 4 * t + t.pow(2));
  CHECK(j["var"] == "t");
  CHECK(j["coeffs"] == Json({"1", "4", "1"}));
}
