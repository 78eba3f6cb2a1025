#pragma once

#include <functional>
#include <vector>

#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"

namespace modrec {

// Truncated power series sum_{k<=order} c_k v^k with coefficients that are
// polynomials in the remaining variables (usually constants). Arithmetic
// never reads past the order.
class Series {
 public:
  Series(Var var, unsigned order);
  Series(Var var, unsigned order, std::vector<Poly> coeffs);
  static Series from_poly(const Poly& p, Var var, unsigned order);

  Var var() const { return var_; }
  unsigned order() const { return order_; }
  const std::vector<Poly>& coefficients() const { return coeffs_; }
  const Poly& coefficient(unsigned k) const { return coeffs_.at(k); }
  // Coefficient as a rational; throws when it is not constant.
  Rational rational_coefficient(unsigned k) const;

  Series truncated(unsigned order) const;
  // Multiply by var^k, dropping what falls past the order.
  Series shifted(unsigned k) const;
  Series scaled(const Poly& c) const;
  Series map_coefficients(const std::function<Poly(const Poly&)>& f) const;
  Poly to_poly() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  // Result order is the smaller of the two.
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) {
    return a.var_ == b.var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Var var_;
  unsigned order_;
  std::vector<Poly> coeffs_;
};

// Power-series expansion of f in var to the given order. The denominator's
// constant term in var must be nonzero and must divide every coefficient that
// arises; otherwise ValidationError.
Series series_expand(const RatFun& f, Var var, unsigned order);

}  // namespace modrec
