#include "modrec/yangmills.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>

#include "modrec/errors.hpp"
#include "modrec/hn.hpp"

namespace modrec {

namespace {

void check_args(int n, int genus) {
  if (n < 1) throw ValidationError("rank must be positive");
  if (genus < 2) throw ValidationError("genus must be at least 2");
}

using SeriesKey = std::tuple<int, long, int, unsigned>;

std::mutex memo_mutex;
std::map<SeriesKey, Series> memo;

}  // namespace

RatFun classifying_series(int n, int genus) {
  check_args(n, genus);
  Poly t = Poly::variable(Var::t);
  const auto g2 = 2 * static_cast<unsigned>(genus);
  Poly num(1);
  Poly den = 1 - t.pow(2 * static_cast<unsigned>(n));
  for (int j = 1; j <= n; ++j) num *= (1 + t.pow(2 * static_cast<unsigned>(j) - 1)).pow(g2);
  for (int j = 1; j < n; ++j) den *= (1 - t.pow(2 * static_cast<unsigned>(j))).pow(2);
  return RatFun(num, den);
}

Series ss_equivariant_series(int n, long d, int genus, unsigned order) {
  check_args(n, genus);
  const SeriesKey key{n, d, genus, order};
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  // Computed outside the lock; the recursion only visits smaller ranks and a
  // racing writer stores an identical value.
  Series result = series_expand(classifying_series(n, genus), Var::t, order);
  for (const auto& mu : enumerate_types(n, d, genus, static_cast<long>(order / 2))) {
    if (mu.is_trivial()) continue;
    Series stratum = Series::from_poly(Poly(1), Var::t, order);
    for (const auto& part : mu.parts())
      stratum = stratum * ss_equivariant_series(part.rank, part.degree, genus, order);
    result = result - stratum.shifted(2 * static_cast<unsigned>(codim(mu, genus)));
  }
  std::lock_guard lock(memo_mutex);
  return memo.try_emplace(key, std::move(result)).first->second;
}

unsigned moduli_top_degree(int n, int genus) {
  check_args(n, genus);
  return 2 * (static_cast<unsigned>(n * n) * static_cast<unsigned>(genus - 1) + 1);
}

Poly moduli_poincare(int n, long d, int genus, unsigned slack) {
  check_args(n, genus);
  if (std::gcd(static_cast<long>(n), d) != 1)
    throw ValidationError("moduli_poincare needs gcd(n, d) = 1; use ss_equivariant_series for (" +
                          std::to_string(n) + ", " + std::to_string(d) + ")");
  const unsigned top = moduli_top_degree(n, genus);
  const unsigned order = top + slack;
  Poly t = Poly::variable(Var::t);
  Series s = Series::from_poly(1 - t.pow(2), Var::t, order) * ss_equivariant_series(n, d, genus, order);
  for (unsigned k = top + 1; k <= order; ++k)
    if (s.rational_coefficient(k) != 0)
      throw InvariantViolation("moduli series has a nonzero coefficient above degree " +
                               std::to_string(top) + " at t^" + std::to_string(k));
  Poly p = s.truncated(top).to_poly();
  for (const auto& [e, c] : p.terms())
    if (c < 0 || !is_integer(c))
      throw InvariantViolation("moduli polynomial has coefficient " + to_string(c));
  if (p.degree(Var::t) != static_cast<int>(top) || !is_palindrome(p, top))
    throw InvariantViolation("moduli polynomial is not palindromic of degree " + std::to_string(top));
  return p;
}

Poly fixed_determinant_poincare(int n, long d, int genus, unsigned slack) {
  Poly t = Poly::variable(Var::t);
  return divide_exact(moduli_poincare(n, d, genus, slack),
                      (1 + t).pow(2 * static_cast<unsigned>(genus)));
}

}  // namespace modrec
