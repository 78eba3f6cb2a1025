#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "known_curves.hpp"
#include "modrec/errors.hpp"
#include "modrec/tamagawa.hpp"
#include "modrec/yangmills.hpp"

using namespace modrec;
using modrec::testing::known_curves;

namespace {

const Poly t = Poly::variable(Var::t);

SpecializationField f2_curve() {
  return SpecializationField::numeric(CurveData::arithmetic(2, 2, {1, 0, 0, 0, 4}));
}

// Partial cone sum over the enumerated types of one composition.
Rational partial_cone(const Composition& ranks, long d, MassEngine& engine, long M) {
  Rational s = 0;
  for (const auto& mu : enumerate_types(static_cast<int>(std::accumulate(ranks.begin(), ranks.end(), 0)), d,
                                        engine.field().genus(), M)) {
    std::vector<int> pattern;
    for (const auto& p : mu.parts()) pattern.push_back(p.rank);
    if (pattern == ranks) s += engine.stratum_mass(mu).constant_value();
  }
  return s;
}

}  // namespace

TEST_CASE("total_mass examples") {
  auto F = f2_curve();
  CHECK(total_mass(1, 0, F) == RatFun(5));
  CHECK(total_mass(2, 1, F) == RatFun(Rational(325, 3)));
  CHECK(total_mass(2, 0, F) == total_mass(2, 7, F));
  for (int g = 2; g <= 3; ++g) {
    auto B = SpecializationField::betti(g);
    auto g2 = 2 * static_cast<unsigned>(g);
    for (int n = 1; n <= 3; ++n) {
      RatFun normalized = total_mass(n, 0, B) * (B.q() - 1) / B.numerator_at_one();
      CHECK(normalized * RatFun((1 + t).pow(g2), 1 - t.pow(2)) == classifying_series(n, g));
    }
  }
}

TEST_CASE("ss_mass and stable counts on the F_2 curve") {
  auto F = f2_curve();
  CHECK(ss_mass(1, 0, F) == RatFun(5));
  CHECK(ss_mass(1, -3, F) == RatFun(5));
  CHECK(ss_mass(2, 1, F) == RatFun(75));
  CHECK(stable_count(1, 0, F) == 5);
  CHECK(stable_count(2, 1, F) == 75);
  CHECK(fixed_determinant_count(2, 1, F) == 15);
  // Frobenius on the fixed-determinant cohomology 1 + t^2 + 4t^3 + t^4 + t^6:
  // even classes contribute q^{k/2}; H^3 has trace q a_1 with a_1 = q + 1 - N_1 = 0.
  Rational q = 2;
  CHECK(fixed_determinant_count(2, 1, F) == 1 + q + q * q + q * q * q + q * (q + 1 - 3));
  CHECK_THROWS_AS(stable_count(2, 2, F), ValidationError);
  CHECK_THROWS_AS(stable_count(2, 1, SpecializationField::betti(2)), ValidationError);
}

TEST_CASE("cone_sum examples") {
  for (int g = 2; g <= 4; ++g) {
    auto field = SpecializationField::numeric(CurveData::arithmetic(2, 2, {1, 0, 0, 0, 4}));
    auto B = SpecializationField::betti(g);
    ConeSum unit{{1, 1}, g, [](int, long) { return Mass(1); }};
    CHECK(cone_sum(unit, 1, B) == B.q_power(g - 1) * B.q() / (B.q() * B.q() - 1));
    CHECK(cone_sum(unit, 3, B) == cone_sum(unit, 1, B));
    ConeSum single{{2}, g, [](int, long residue) { return Mass(10 + residue); }};
    CHECK(cone_sum(single, 5, field) == Mass(11));
  }
  auto F = f2_curve();
  ConeSum unit{{1, 1}, 2, [](int, long) { return Mass(1); }};
  CHECK(cone_sum(unit, 1, F) == Mass(Rational(4, 3)));
}

TEST_CASE("cone sums are limits of partial sums within the tail bound") {
  auto F = f2_curve();
  MassEngine engine(F);
  for (int n = 2; n <= 3; ++n)
    for (long d = 0; d < n; ++d)
      for (const auto& ranks : compositions(n)) {
        if (ranks.size() < 2) continue;
        Rational closed = cone_sum(engine.cone(ranks), d, F).constant_value();
        for (long M : {5L, 10L, 15L, 20L}) {
          Rational gap = closed - partial_cone(ranks, d, engine, M);
          CHECK(gap >= 0);
          CHECK(gap <= cone_tail_bound(engine.cone(ranks), d, F, M));
        }
      }
}

TEST_CASE("Betti masses reproduce the moduli polynomials") {
  for (int g = 2; g <= 3; ++g) {
    auto B = SpecializationField::betti(g);
    MassEngine engine(B);
    for (auto [n, d] : {std::pair{2, 1L}, std::pair{3, 1L}, std::pair{3, 2L}}) {
      CAPTURE(n);
      CAPTURE(g);
      CHECK((B.q() - 1) * engine.ss_mass(n, d) == RatFun(moduli_poincare(n, d, g)));
    }
  }
}

TEST_CASE("Hodge masses specialize to Betti masses") {
  auto H = SpecializationField::hodge(2);
  auto B = SpecializationField::betti(2);
  Bindings diag{{Var::u, RatFun(t)}, {Var::v, RatFun(t)}};
  for (int n = 1; n <= 2; ++n)
    for (long d = 0; d < n; ++d) CHECK(substitute(ss_mass(n, d, H), diag) == ss_mass(n, d, B));
  CHECK(substitute(total_mass(3, 0, H), diag) == total_mass(3, 0, B));
}

TEST_CASE("masses are periodic in the degree") {
  auto F = f2_curve();
  auto B = SpecializationField::betti(2);
  for (int n = 2; n <= 3; ++n)
    for (long d = -1; d < n; ++d) {
      CHECK(ss_mass(n, d, F) == ss_mass(n, d + n, F));
      CHECK(ss_mass(n, d, B) == ss_mass(n, d + n, B));
    }
}

TEST_CASE("stable counts are integers on brute-forced curves") {
  for (const auto& known : known_curves()) {
    auto F = SpecializationField::numeric(curve_from_model(known.model));
    CHECK(is_integer(stable_count(2, 1, F)));
    CHECK(is_integer(fixed_determinant_count(2, 1, F)));
    CHECK(is_integer(stable_count(3, 1, F)));
    CHECK(stable_count(3, 1, F) == stable_count(3, 2, F));
  }
}

TEST_CASE("siegel_check") {
  auto F = f2_curve();
  auto rank_one = siegel_check(1, 0, F, 0);
  CHECK(rank_one.gaps == std::vector<Rational>{0});
  for (int n = 2; n <= 3; ++n) {
    auto report = siegel_check(n, 1, F, 20);
    REQUIRE(report.gaps.size() == 21);
    CHECK(report.gaps.back() > 0);
    CHECK(report.gaps.back() < report.tail_bound);
    CHECK(report.total == Rational(total_mass(n, 1, F).constant_value()));
  }
  auto two = siegel_check(2, 1, F, 20);
  CHECK(two.tail_bound * (1 << 18) <= 25);
  auto j = to_json(two);
  CHECK(j["mode"] == "numeric");
  CHECK(j["partial_sums"].size() == 21);
  CHECK(j.contains("tail_bound"));
  CHECK_THROWS_AS(siegel_check(2, 1, SpecializationField::betti(2), 4), ValidationError);
}
