#pragma once

#include <map>
#include <string>

#include "modrec/poly.hpp"

namespace modrec {

// A quotient num/den kept in canonical form: gcd(num, den) = 1 and den has
// coprime integer coefficients with a positive leading coefficient. Two equal
// rational functions therefore have identical representations.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}           // NOLINT
  RatFun(const Rational& c) : num_(c), den_(1) {}       // NOLINT
  RatFun(long c) : num_(c), den_(1) {}                  // NOLINT
  // Throws ValidationError when den is zero.
  RatFun(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Throws ValidationError unless constant.
  Rational constant_value() const;
  // Throws ValidationError unless the denominator is a constant.
  Poly as_poly() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws ValidationError for the zero function.
  RatFun inverse() const;
  RatFun pow(long e) const;

  std::string to_string() const;

 private:
  enum class Reduced { no, yes };
  RatFun(Poly num, Poly den, Reduced reduced);
  void normalize(Reduced reduced);

  Poly num_;
  Poly den_;
};

using Bindings = std::map<Var, RatFun>;

// Replace each bound variable by its image. Throws ValidationError when the
// denominator becomes identically zero.
RatFun substitute(const Poly& p, const Bindings& bindings);
RatFun substitute(const RatFun& f, const Bindings& bindings);

}  // namespace modrec
