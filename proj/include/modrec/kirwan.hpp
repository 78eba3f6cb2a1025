#pragma once

#include <vector>

#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"
#include "modrec/serialize.hpp"

namespace modrec {

// Weights (w_0..w_N) of a one-parameter torus acting on the homogeneous
// coordinates of P^N, linearized at 0.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<long> weights);

  const std::vector<long>& weights() const { return weights_; }
  int dimension() const { return static_cast<int>(weights_.size()) - 1; }
  int multiplicity(long value) const;
  int count_below(long value) const;
  int count_above(long value) const;
  bool has_semistable_points() const;
  // Distinct weight values, ascending.
  std::vector<long> values() const;
  WeightSystem negated() const;
  WeightSystem translated(long c) const;

 private:
  std::vector<long> weights_;
};

// beta = 0 is the semistable stratum (fixed_dim = N, the open set itself).
// For beta != 0, Z_beta is the projectivized weight-beta coordinate subspace.
struct Stratum {
  long beta = 0;
  int fixed_dim = 0;
  int codim = 0;
};

// Semistable stratum first when non-empty, then positive beta ascending,
// then negative beta by increasing |beta|.
std::vector<Stratum> strata(const WeightSystem& w);

struct PerfectionReport {
  RatFun ambient;     // P_t(P^N) / (1 - t^2)
  RatFun unstable;    // sum_{beta != 0} t^{2 d_beta} P_t(Z_beta) / (1 - t^2)
  RatFun semistable;  // ambient - unstable
  unsigned checked_order = 0;
};

// Solves the perfection identity for the semistable equivariant series and
// checks its coefficients are non-negative (InvariantViolation otherwise).
PerfectionReport perfection_check(const WeightSystem& w);

// Poincare polynomial of the quotient when semistable = stable: no zero
// weight and both signs present.
Poly quotient_poincare(const WeightSystem& w);

struct BBCell {
  long value = 0;
  int multiplicity = 0;
  int codim = 0;
};

struct BBReport {
  Poly total;  // P_t(P^N)
  std::vector<BBCell> cells;
  Poly cell_sum;  // sum t^{2 codim} P_t(P^{m-1})
};

// Bialynicki-Birula bookkeeping over the fixed components; throws
// InvariantViolation if the cell sum differs from P_t(P^N).
BBReport bb_decomposition(const WeightSystem& w);

Json to_json(const WeightSystem& w);
WeightSystem weight_system_from_json(const Json& j);
Json to_json(const Stratum& s);
Json to_json(const PerfectionReport& r);
Json to_json(const BBReport& r);

}  // namespace modrec
