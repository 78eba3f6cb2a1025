#include "modrec/specialization.hpp"

#include "modrec/errors.hpp"

namespace modrec {

std::string_view mode_name(FieldMode mode) {
  switch (mode) {
    case FieldMode::numeric: return "numeric";
    case FieldMode::betti: return "betti";
    case FieldMode::hodge: return "hodge";
  }
  return "unknown";
}

SpecializationField SpecializationField::numeric(const CurveData& curve) {
  if (!curve.is_arithmetic()) throw ValidationError("numeric mode needs an arithmetic curve");
  return SpecializationField(FieldMode::numeric, curve.genus(), RatFun(Rational(curve.q())),
                             curve.numerator_poly(Var::x), curve);
}

SpecializationField SpecializationField::betti(int genus) {
  if (genus < 2) throw ValidationError("curve genus must be >= 2");
  Poly t = Poly::variable(Var::t);
  Poly x = Poly::variable(Var::x);
  return SpecializationField(FieldMode::betti, genus, RatFun(t.pow(2)),
                             (1 + t * x).pow(2 * static_cast<unsigned>(genus)), std::nullopt);
}

SpecializationField SpecializationField::hodge(int genus) {
  if (genus < 2) throw ValidationError("curve genus must be >= 2");
  Poly u = Poly::variable(Var::u);
  Poly v = Poly::variable(Var::v);
  Poly x = Poly::variable(Var::x);
  return SpecializationField(FieldMode::hodge, genus, RatFun(u * v),
                             ((1 + u * x) * (1 + v * x)).pow(static_cast<unsigned>(genus)),
                             std::nullopt);
}

RatFun SpecializationField::q_power(long e) const { return q_.pow(e); }

RatFun SpecializationField::numerator_at(const RatFun& x) const {
  return substitute(numerator_, {{Var::x, x}});
}

RatFun zeta_value(const SpecializationField& field, int i) {
  if (i < 2) throw ValidationError("zeta values are taken at integers i >= 2");
  RatFun qi = field.q_power(-i);
  RatFun qi1 = field.q_power(1 - i);
  return field.numerator_at(qi) / ((RatFun(1) - qi) * (RatFun(1) - qi1));
}

}  // namespace modrec
