#include "modrec/matrixdiv.hpp"

#include <string>

#include "modrec/errors.hpp"
#include "modrec/series.hpp"
#include "modrec/symprod.hpp"
#include "modrec/yangmills.hpp"

namespace modrec {

namespace {

void check_args(int n, int e, int genus) {
  if (n < 1) throw ValidationError("rank must be positive");
  if (e < 0) throw ValidationError("torsion length must be non-negative");
  if (genus < 0) throw ValidationError("genus must be non-negative");
}

// sum_{|d|=e} shift^{c_d} prod_i table[d_i], built one index at a time:
// after k indices, acc[m] collects all (d_1..d_k) with sum m.
Poly fixed_point_sum(int n, int e, const std::vector<Poly>& table, const Poly& shift) {
  const auto size = static_cast<std::size_t>(e) + 1;
  std::vector<Poly> acc(table.begin(), table.begin() + static_cast<long>(size));
  for (int i = 2; i <= n; ++i) {
    const Poly weight = shift.pow(static_cast<unsigned>(i - 1));
    std::vector<Poly> weighted(size);
    Poly w(1);
    for (std::size_t j = 0; j < size; ++j, w *= weight) weighted[j] = w * table[j];
    std::vector<Poly> next(size);
    for (std::size_t m = 0; m < size; ++m)
      for (std::size_t j = 0; j <= m; ++j) next[m] += acc[m - j] * weighted[j];
    acc = std::move(next);
  }
  return acc.back();
}

std::vector<Rational> low_coefficients(const Poly& p, unsigned cutoff) {
  std::vector<Rational> out(cutoff + 1);
  for (const auto& [exp, c] : p.terms()) {
    auto k = exp[static_cast<std::size_t>(Var::t)];
    if (k <= cutoff) out[k] = c;
  }
  return out;
}

std::optional<unsigned> first_difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return static_cast<unsigned>(k);
  return std::nullopt;
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

Poly div_poincare(int n, int e, int genus) {
  check_args(n, e, genus);
  return fixed_point_sum(n, e, sym_poincare_table(genus, e), Poly::variable(Var::t, 2));
}

Poly div_hodge(int n, int e, int genus) {
  check_args(n, e, genus);
  return fixed_point_sum(n, e, sym_hodge_table(genus, e), Poly::variable(Var::u) * Poly::variable(Var::v));
}

BridgeReport div_bridge_check(int n, int genus, int e, unsigned cutoff) {
  check_args(n, e, genus);
  if (static_cast<long>(e) < static_cast<long>(cutoff) + 2L * genus * n)
    throw ValidationError("bridge check needs e >= K + 2gn (e = " + std::to_string(e) +
                          ", K = " + std::to_string(cutoff) + ")");
  BridgeReport report;
  report.n = n;
  report.genus = genus;
  report.e = e;
  report.cutoff = cutoff;
  report.coefficients = low_coefficients(div_poincare(n, e, genus), cutoff);
  report.next_coefficients = low_coefficients(div_poincare(n, e + 1, genus), cutoff);
  report.classifying = low_coefficients(series_expand(classifying_series(n, genus), Var::t, cutoff).to_poly(), cutoff);
  report.first_unstable = first_difference(report.coefficients, report.next_coefficients);
  report.first_mismatch = first_difference(report.coefficients, report.classifying);
  return report;
}

Json to_json(const BridgeReport& report) {
  Json j{{"n", report.n},
         {"g", report.genus},
         {"e", report.e},
         {"cutoff", report.cutoff},
         {"stable", !report.first_unstable},
         {"match", !report.first_mismatch},
         {"coefficients", rational_list(report.coefficients)},
         {"next_coefficients", rational_list(report.next_coefficients)},
         {"classifying", rational_list(report.classifying)}};
  if (report.first_unstable) j["first_unstable"] = *report.first_unstable;
  if (report.first_mismatch) j["first_mismatch"] = *report.first_mismatch;
  return j;
}

}  // namespace modrec
