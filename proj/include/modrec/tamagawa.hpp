#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "modrec/hn.hpp"
#include "modrec/ratfun.hpp"
#include "modrec/serialize.hpp"
#include "modrec/specialization.hpp"

namespace modrec {

// A stacky mass sum_E 1/|Aut E|, as an element of the specialization field.
using Mass = RatFun;

// Sum over all HN types with rank pattern `ranks` and total degree d of
//   q^{mass_exponent(mu)} prod_j factor(n_j, d_j mod n_j).
// The slope gaps k_i >= 1 run over a residue box of side n n_i n_{i+1}; each
// box point carries a product of geometric series in q^{-n N_i (n - N_i)}.
struct ConeSum {
  Composition ranks;
  int genus = 2;
  std::function<Mass(int rank, long residue)> factor;
};

Mass cone_sum(const ConeSum& cone, long d, const SpecializationField& field);

// Rigorous upper bound on the part of the cone sum coming from types of
// codim > max_codim. Numeric fields only.
Rational cone_tail_bound(const ConeSum& cone, long d, const SpecializationField& field, long max_codim);

// Harder-Narasimhan recursion for semistable masses over one field. The
// semistable masses feeding each cone are memoized on (n, d mod n); the
// requested (n, d) itself is always summed from its own degree.
class MassEngine {
 public:
  explicit MassEngine(SpecializationField field) : field_(std::move(field)) {}

  const SpecializationField& field() const { return field_; }
  // P(1)/(q-1) q^{(n^2-1)(g-1)} zeta(2)...zeta(n), independent of degree.
  Mass total_mass(int n) const;
  Mass ss_mass(int n, long d);
  Mass stratum_mass(const HNType& mu);
  ConeSum cone(const Composition& ranks);

 private:
  Mass residue_mass(int n, long residue);

  SpecializationField field_;
  std::map<std::pair<int, long>, Mass> cache_;
};

Mass total_mass(int n, long d, const SpecializationField& field);
Mass ss_mass(int n, long d, const SpecializationField& field);

// (q-1) ss_mass for coprime (n, d): the number of stable bundles.
Rational stable_count(int n, long d, const SpecializationField& field);
// stable_count / P(1): stable bundles with a fixed determinant.
Rational fixed_determinant_count(int n, long d, const SpecializationField& field);

struct SiegelReport {
  int n = 1;
  long d = 0;
  FieldMode mode = FieldMode::numeric;
  Rational total;
  // partial_sums[m] = semistable mass plus all strata of codim <= m.
  std::vector<Rational> partial_sums;
  std::vector<Rational> gaps;
  Rational tail_bound;
};

// Partial sums of stratum masses against the total mass for m = 0..M. Throws
// InvariantViolation unless the gaps are non-negative, non-increasing,
// strictly decreasing whenever new strata enter, and the final gap is within
// the tail bound.
SiegelReport siegel_check(int n, long d, const SpecializationField& field, long max_codim);

Json to_json(const SiegelReport& report);

}  // namespace modrec
