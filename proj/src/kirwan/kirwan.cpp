#include "modrec/kirwan.hpp"

#include <algorithm>
#include <set>

#include "modrec/errors.hpp"
#include "modrec/series.hpp"

namespace modrec {

namespace {

// [m]_{t^2} = 1 + t^2 + ... + t^{2(m-1)}, the Poincare polynomial of P^{m-1}.
Poly projective_space(int m) {
  Poly p;
  for (int i = 0; i < m; ++i) p += Poly::variable(Var::t, 2 * static_cast<unsigned>(i));
  return p;
}

Poly t_power(int k) { return Poly::variable(Var::t, 2 * static_cast<unsigned>(k)); }

RatFun over_bc(const Poly& p) { return RatFun(p, 1 - Poly::variable(Var::t, 2)); }

}  // namespace

WeightSystem::WeightSystem(std::vector<long> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw ValidationError("weight system needs at least two weights (N >= 1)");
}

int WeightSystem::multiplicity(long value) const {
  return static_cast<int>(std::count(weights_.begin(), weights_.end(), value));
}

int WeightSystem::count_below(long value) const {
  return static_cast<int>(std::count_if(weights_.begin(), weights_.end(), [&](long w) { return w < value; }));
}

int WeightSystem::count_above(long value) const {
  return static_cast<int>(std::count_if(weights_.begin(), weights_.end(), [&](long w) { return w > value; }));
}

bool WeightSystem::has_semistable_points() const {
  auto [lo, hi] = std::minmax_element(weights_.begin(), weights_.end());
  return *lo <= 0 && *hi >= 0;
}

std::vector<long> WeightSystem::values() const {
  std::set<long> distinct(weights_.begin(), weights_.end());
  return {distinct.begin(), distinct.end()};
}

WeightSystem WeightSystem::negated() const {
  auto w = weights_;
  for (auto& x : w) x = -x;
  return WeightSystem(std::move(w));
}

WeightSystem WeightSystem::translated(long c) const {
  auto w = weights_;
  for (auto& x : w) x += c;
  return WeightSystem(std::move(w));
}

std::vector<Stratum> strata(const WeightSystem& w) {
  std::vector<Stratum> out;
  if (w.has_semistable_points()) out.push_back({0, w.dimension(), 0});
  std::vector<long> negative;
  for (long v : w.values()) {
    if (v > 0) out.push_back({v, w.multiplicity(v) - 1, w.count_below(v)});
    if (v < 0) negative.push_back(v);
  }
  for (auto it = negative.rbegin(); it != negative.rend(); ++it)
    out.push_back({*it, w.multiplicity(*it) - 1, w.count_above(*it)});
  return out;
}

PerfectionReport perfection_check(const WeightSystem& w) {
  if (!w.has_semistable_points())
    throw ValidationError("semistable locus is empty: weights do not straddle 0");
  PerfectionReport report;
  const Poly total = projective_space(w.dimension() + 1);
  Poly unstable;
  for (const auto& s : strata(w))
    if (s.beta != 0) unstable += t_power(s.codim) * projective_space(s.fixed_dim + 1);
  report.ambient = over_bc(total);
  report.unstable = over_bc(unstable);
  report.semistable = report.ambient - report.unstable;
  if (report.semistable + report.unstable != report.ambient)
    throw InvariantViolation("perfection identity does not balance");
  // The numerator has degree <= 2N, so past that the series is eventually
  // periodic with period 2; two more orders cover a full period.
  report.checked_order = 2 * static_cast<unsigned>(w.dimension()) + 2;
  auto series = series_expand(report.semistable, Var::t, report.checked_order);
  for (unsigned k = 0; k <= report.checked_order; ++k)
    if (series.rational_coefficient(k) < 0)
      throw InvariantViolation("semistable equivariant series has a negative coefficient at t^" +
                               std::to_string(k));
  return report;
}

Poly quotient_poincare(const WeightSystem& w) {
  const auto& ws = w.weights();
  bool positive = std::any_of(ws.begin(), ws.end(), [](long x) { return x > 0; });
  bool negative = std::any_of(ws.begin(), ws.end(), [](long x) { return x < 0; });
  if (w.multiplicity(0) > 0 || !positive || !negative)
    throw ValidationError("semistable != stable: quotient needs nonzero weights of both signs");
  auto report = perfection_check(w);
  if (!report.semistable.is_polynomial())
    throw InvariantViolation("quotient series is not a polynomial");
  Poly p = report.semistable.as_poly();
  const auto top = 2 * static_cast<unsigned>(w.dimension() - 1);
  if (p.degree(Var::t) != static_cast<int>(top) || !is_palindrome(p, top))
    throw InvariantViolation("quotient polynomial is not palindromic of degree " + std::to_string(top));
  for (const auto& [e, c] : p.terms())
    if (c < 0 || !is_integer(c)) throw InvariantViolation("quotient polynomial has coefficient " + to_string(c));
  return p;
}

BBReport bb_decomposition(const WeightSystem& w) {
  BBReport report;
  report.total = projective_space(w.dimension() + 1);
  for (long v : w.values()) {
    BBCell cell{v, w.multiplicity(v), w.count_below(v)};
    report.cell_sum += t_power(cell.codim) * projective_space(cell.multiplicity);
    report.cells.push_back(cell);
  }
  if (report.cell_sum != report.total)
    throw InvariantViolation("Bialynicki-Birula cells do not add up to P^N");
  return report;
}

Json to_json(const WeightSystem& w) { return w.weights(); }

WeightSystem weight_system_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("weight system must be a JSON integer array");
  std::vector<long> weights;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ValidationError("weights must be integers");
    weights.push_back(x.get<long>());
  }
  return WeightSystem(std::move(weights));
}

Json to_json(const Stratum& s) { return {{"beta", s.beta}, {"fixed_dim", s.fixed_dim}, {"codim", s.codim}}; }

Json to_json(const PerfectionReport& r) {
  return {{"ambient", to_json(r.ambient)},
          {"unstable", to_json(r.unstable)},
          {"semistable", to_json(r.semistable)},
          {"checked_order", r.checked_order}};
}

Json to_json(const BBReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}, {"codim", c.codim}});
  return {{"total", to_json(r.total)}, {"cells", cells}, {"cell_sum", to_json(r.cell_sum)}};
}

}  // namespace modrec
