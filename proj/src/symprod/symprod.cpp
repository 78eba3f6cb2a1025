#include "modrec/symprod.hpp"

#include <string>

#include "modrec/errors.hpp"
#include "modrec/finite_field.hpp"
#include "modrec/series.hpp"

namespace modrec {

namespace {

void check_args(int genus, int n) {
  if (genus < 0) throw ValidationError("genus must be non-negative");
  if (n < 0) throw ValidationError("symmetric power index must be non-negative");
}

std::vector<Poly> coefficients_up_to(const RatFun& generating, int n_max) {
  auto series = series_expand(generating, Var::x, static_cast<unsigned>(n_max));
  return series.coefficients();
}

int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace

std::vector<Poly> sym_poincare_table(int genus, int n_max) {
  check_args(genus, n_max);
  Poly x = Poly::variable(Var::x);
  Poly t = Poly::variable(Var::t);
  RatFun gen((1 + x * t).pow(2 * static_cast<unsigned>(genus)), (1 - x) * (1 - x * t.pow(2)));
  return coefficients_up_to(gen, n_max);
}

Poly sym_poincare(int genus, int n) { return sym_poincare_table(genus, n).back(); }

std::vector<Poly> sym_hodge_table(int genus, int n_max) {
  check_args(genus, n_max);
  Poly x = Poly::variable(Var::x);
  Poly u = Poly::variable(Var::u);
  Poly v = Poly::variable(Var::v);
  auto g = static_cast<unsigned>(genus);
  RatFun gen((1 + x * u).pow(g) * (1 + x * v).pow(g), (1 - x) * (1 - x * u * v));
  return coefficients_up_to(gen, n_max);
}

Poly sym_hodge(int genus, int n) { return sym_hodge_table(genus, n).back(); }

Rational sym_count(const CurveData& curve, int n) {
  if (n < 0) throw ValidationError("symmetric power index must be non-negative");
  auto series = series_expand(zeta_Z(curve, Var::x), Var::x, static_cast<unsigned>(n));
  return series.rational_coefficient(static_cast<unsigned>(n));
}

Integer divisor_enumerate(const HyperellipticModel& model, int n) {
  if (n < 0) throw ValidationError("divisor degree must be non-negative");
  if (n > 6) throw ValidationError("divisor enumeration is limited to degree <= 6");
  if (n == 0) return 1;
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::uint64_t>(model.base_field_size());
    if (size > FiniteField::kMaxSize)
      throw ValidationError("divisor enumeration needs q^n <= 2^20, q = " +
                            std::to_string(model.base_field_size()) + ", n = " + std::to_string(n));
  }
  std::vector<Integer> N(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) N[static_cast<std::size_t>(r)] = static_cast<long>(count_points(model, r));

  // ways[m] = number of multisets of closed points of total degree m.
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int d = 1; d <= n; ++d) {
    Integer sum = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) sum += moebius(d / e) * N[static_cast<std::size_t>(e)];
    if (sum % d != 0) throw InvariantViolation("closed-point count is not an integer");
    Integer closed = sum / d;
    std::vector<Integer> next(ways.size(), 0);
    for (int m = 0; m <= n; ++m) {
      if (ways[static_cast<std::size_t>(m)] == 0) continue;
      for (int j = 0; m + j * d <= n; ++j)
        next[static_cast<std::size_t>(m + j * d)] +=
            ways[static_cast<std::size_t>(m)] * binomial(closed + j - 1, static_cast<unsigned long>(j));
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace modrec
