#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "modrec/errors.hpp"
#include "modrec/kirwan.hpp"

using namespace modrec;

namespace {

const Poly t = Poly::variable(Var::t);

// Equivariant point count of X^ss: sum over coordinate supports S that meet
// weight 0 or both signs of (q-1)^{|S|-1}, divided by |C*| = q - 1. For a
// pure smooth N-dimensional X^ss this equals q^{N-1} P(q^{-1/2}), so the
// series is recovered by q -> t^{-2} and a factor t^{2(N-1)}.
RatFun counted_semistable_series(const WeightSystem& w) {
  const auto& ws = w.weights();
  const std::size_t size = ws.size();
  Poly q = Poly::variable(Var::q);
  Poly count;
  for (std::size_t mask = 1; mask < (std::size_t{1} << size); ++mask) {
    bool pos = false, neg = false, zero = false;
    unsigned support = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if (!(mask >> i & 1)) continue;
      ++support;
      pos |= ws[i] > 0;
      neg |= ws[i] < 0;
      zero |= ws[i] == 0;
    }
    if (zero || (pos && neg)) count += (q - 1).pow(support - 1);
  }
  RatFun equivariant(count, q - 1);
  RatFun inv_t2(Poly(1), t.pow(2));
  return substitute(equivariant, Bindings{{Var::q, inv_t2}}) * RatFun(t.pow(2 * static_cast<unsigned>(w.dimension() - 1)));
}

Poly t2_poly(std::vector<long> coeffs) {
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p += coeffs[i] * t.pow(2 * static_cast<unsigned>(i));
  return p;
}

}  // namespace

TEST_CASE("strata examples") {
  auto p1 = strata(WeightSystem({-1, 1}));
  REQUIRE(p1.size() == 3);
  CHECK(p1[0].beta == 0);
  CHECK((p1[1].beta == 1 && p1[1].fixed_dim == 0 && p1[1].codim == 1));
  CHECK((p1[2].beta == -1 && p1[2].fixed_dim == 0 && p1[2].codim == 1));

  auto p3 = strata(WeightSystem({1, 1, -1, -1}));
  REQUIRE(p3.size() == 3);
  CHECK((p3[1].fixed_dim == 1 && p3[1].codim == 2));
  CHECK((p3[2].fixed_dim == 1 && p3[2].codim == 2));

  auto unstable = strata(WeightSystem({1, 1}));
  REQUIRE(unstable.size() == 1);
  CHECK(unstable[0].beta == 1);
  CHECK(unstable[0].codim == 0);
  CHECK_THROWS_AS(WeightSystem({3}), ValidationError);
}

TEST_CASE("perfection examples") {
  CHECK(perfection_check(WeightSystem({-1, 1})).semistable == RatFun(1));
  CHECK(perfection_check(WeightSystem({1, 1, -1, -1})).semistable == RatFun((1 + t.pow(2)).pow(2)));
  auto with_zero = perfection_check(WeightSystem({0, 1, -1}));
  CHECK(with_zero.semistable + with_zero.unstable == with_zero.ambient);
  CHECK(with_zero.semistable == RatFun(1 + t.pow(2) - t.pow(4), 1 - t.pow(2)));
  CHECK_THROWS_AS(perfection_check(WeightSystem({1, 2})), ValidationError);
}

TEST_CASE("quotient examples") {
  CHECK(quotient_poincare(WeightSystem({-1, 1})) == Poly(1));
  CHECK(quotient_poincare(WeightSystem({1, 1, -1, -1})) == t2_poly({1, 2, 1}));
  // P^2 x P^2 for the balanced action on C^3 + C^3.
  CHECK(quotient_poincare(WeightSystem({1, 1, 1, -1, -1, -1})) == t2_poly({1, 2, 3, 2, 1}));
  CHECK_THROWS_AS(quotient_poincare(WeightSystem({0, 1, -1})), ValidationError);
  CHECK_THROWS_AS(quotient_poincare(WeightSystem({1, 2, 3})), ValidationError);
}

TEST_CASE("bb decomposition examples") {
  CHECK(bb_decomposition(WeightSystem({0, 0, 0})).cells.size() == 1);
  CHECK(bb_decomposition(WeightSystem({-1, 1})).cell_sum == 1 + t.pow(2));
  auto r = bb_decomposition(WeightSystem({1, 1, -1, -1}));
  CHECK(r.cell_sum == (1 + t.pow(2)) + t.pow(4) * (1 + t.pow(2)));
}

TEST_CASE("random weight systems match the point-count oracle") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> size_dist(2, 9);
  std::uniform_int_distribution<long> weight_dist(-5, 5);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> ws(static_cast<std::size_t>(size_dist(rng)));
    for (auto& x : ws) x = weight_dist(rng);
    WeightSystem w(ws);
    CAPTURE(to_json(w).dump());
    CHECK_NOTHROW(bb_decomposition(w));
    if (!w.has_semistable_points()) {
      CHECK_THROWS_AS(perfection_check(w), ValidationError);
      continue;
    }
    auto report = perfection_check(w);
    CHECK(report.semistable == counted_semistable_series(w));
    bool quotient = w.multiplicity(0) == 0;
    if (quotient) {
      Poly p = quotient_poincare(w);
      CHECK(RatFun(p) == report.semistable);
      CHECK(quotient_poincare(w.negated()) == p);
    }
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("negation and translation") {
  WeightSystem w({2, 1, -1, -3, 0});
  auto a = strata(w), b = strata(w.negated());
  REQUIRE(a.size() == b.size());
  for (const auto& s : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Stratum& x) { return x.beta == -s.beta; });
    REQUIRE(it != b.end());
    CHECK(it->codim == s.codim);
    CHECK(it->fixed_dim == s.fixed_dim);
  }
  auto shifted = w.translated(4);
  CHECK(!shifted.has_semistable_points());
  CHECK(strata(shifted).front().beta != 0);
}

TEST_CASE("weight system JSON") {
  WeightSystem w({1, -2, 0});
  CHECK(to_json(w).dump() == "[1,-2,0]");
  CHECK(weight_system_from_json(to_json(w)).weights() == w.weights());
  CHECK_THROWS_AS(weight_system_from_json(Json::parse("[1.5, 2]")), ValidationError);
}
