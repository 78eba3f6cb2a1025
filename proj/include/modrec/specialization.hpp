#pragma once

#include <optional>
#include <string_view>

#include "modrec/curve.hpp"
#include "modrec/ratfun.hpp"

namespace modrec {

enum class FieldMode { numeric, betti, hodge };

std::string_view mode_name(FieldMode mode);

// The coefficient field in which point-count formulas are evaluated: a
// counting unit q and the curve numerator P(x).
//   numeric: q and P from an arithmetic curve; elements are rationals.
//   betti:   q = t^2, P(x) = (1 + t x)^{2g}.
//   hodge:   q = u v, P(x) = ((1 + u x)(1 + v x))^g.
// Field elements are carried as RatFun in every mode.
class SpecializationField {
 public:
  static SpecializationField numeric(const CurveData& curve);
  static SpecializationField betti(int genus);
  static SpecializationField hodge(int genus);

  FieldMode mode() const { return mode_; }
  int genus() const { return genus_; }
  const RatFun& q() const { return q_; }
  // P as a polynomial in Var::x over the field's own variables.
  const Poly& numerator() const { return numerator_; }
  const std::optional<CurveData>& curve() const { return curve_; }

  RatFun q_power(long e) const;
  RatFun numerator_at(const RatFun& x) const;
  RatFun numerator_at_one() const { return numerator_at(RatFun(1)); }

 private:
  SpecializationField(FieldMode mode, int genus, RatFun q, Poly numerator,
                      std::optional<CurveData> curve)
      : mode_(mode), genus_(genus), q_(std::move(q)), numerator_(std::move(numerator)),
        curve_(std::move(curve)) {}

  FieldMode mode_;
  int genus_;
  RatFun q_;
  Poly numerator_;
  std::optional<CurveData> curve_;
};

// zeta_C(i) = Z_C(q^{-i}) evaluated in the field. Requires i >= 2.
RatFun zeta_value(const SpecializationField& field, int i);

}  // namespace modrec
