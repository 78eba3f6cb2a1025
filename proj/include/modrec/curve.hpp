#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"

namespace modrec {

// y^2 + h(x) y = f(x) with coefficients in F_p, counted over extensions of
// F_q, q = p^k. Coefficient lists are ascending and reduced mod p on use.
struct HyperellipticModel {
  std::int64_t p = 2;
  int k = 1;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;

  std::int64_t base_field_size() const;
  // ceil(max(deg f, 2 deg h) / 2) - 1
  int genus() const;
};

// Throws ValidationError unless the model is a smooth curve of genus >= 1,
// including at infinity.
void validate_model(const HyperellipticModel& model);

// |C(F_{q^r})| for the smooth projective model. Requires q^r <= 2^20.
std::int64_t count_points(const HyperellipticModel& model, int r);

// A smooth projective curve of genus >= 2, either known only by its genus or
// with the numerator P(t) = 1 + a_1 t + ... + a_{2g} t^{2g} of its zeta
// function over F_q.
class CurveData {
 public:
  static CurveData symbolic(int genus);
  // Validates P(0) = 1, the functional equation a_{2g-i} = q^{g-i} a_i and
  // that every reciprocal root has absolute value sqrt(q).
  static CurveData arithmetic(int genus, std::int64_t q, std::vector<Integer> numerator);

  int genus() const { return genus_; }
  bool is_arithmetic() const { return q_.has_value(); }
  // Both throw ValidationError in symbolic mode.
  std::int64_t q() const;
  const std::vector<Integer>& numerator() const;
  Poly numerator_poly(Var v) const;
  // P(1) = |Pic^0(F_q)|.
  Integer jacobian_order() const;

 private:
  CurveData(int genus, std::optional<std::int64_t> q, std::vector<Integer> numerator)
      : genus_(genus), q_(q), numerator_(std::move(numerator)) {}

  int genus_;
  std::optional<std::int64_t> q_;
  std::vector<Integer> numerator_;
};

// Reconstructs P from N_1..N_g by Newton's identities on the power sums
// S_r = q^r + 1 - N_r, completed with the functional equation.
CurveData zeta_from_counts(std::int64_t q, int genus, std::span<const Integer> counts);

// N_1..N_{r_max} predicted by the zeta function.
std::vector<Integer> counts_from_zeta(const CurveData& curve, int r_max);

// Z_C(v) = P(v) / ((1 - v)(1 - q v)).
RatFun zeta_Z(const CurveData& curve, Var v = Var::t);

// Throws ValidationError when some root of P does not have |alpha|^2 = q.
// Exact: the real polynomial with roots alpha + conj(alpha) is checked by
// Sturm sequences to have all its roots in [-2 sqrt(q), 2 sqrt(q)].
void validate_weil(std::int64_t q, int genus, const std::vector<Integer>& numerator);

// Loads the model and checks it, then counts N_1..N_g and reconstructs.
CurveData curve_from_model(const HyperellipticModel& model);

}  // namespace modrec
