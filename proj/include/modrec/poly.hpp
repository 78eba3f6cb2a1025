#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modrec/rational.hpp"

namespace modrec {

// The closed set of variable names used across the library.
enum class Var : std::uint8_t { t = 0, q = 1, x = 2, u = 3, v = 4 };
inline constexpr std::size_t kVarCount = 5;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::t, Var::q, Var::x, Var::u, Var::v};

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint32_t, kVarCount>;

// Sparse multivariate polynomial over Q. Terms are keyed by exponent vectors
// in lexicographic order (t > q > x > u > v); the leading term is the
// lexicographically largest one. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)

  static Poly variable(Var v, unsigned power = 1);
  static Poly monomial(const Rational& c, const Exponents& e);
  // Sum of coeffs[k] * v^k.
  static Poly univariate(Var v, std::span<const Rational> coeffs);
  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Throws ValidationError when the polynomial is not constant.
  Rational constant_value() const;

  // Degree in v; -1 for the zero polynomial.
  int degree(Var v) const;
  std::vector<Var> variables() const;
  bool uses(Var v) const;
  // True when no variable other than v occurs.
  bool is_univariate_in(Var v) const;

  Rational coefficient(const Exponents& e) const;
  // Coefficients c_k with this = sum c_k v^k; c_k free of v.
  std::vector<Poly> coefficients_in(Var v) const;
  // Dense coefficient list for a polynomial univariate in v.
  std::vector<Rational> dense(Var v) const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  Poly derivative(Var v) const;
  Poly pow(unsigned e) const;
  Poly scaled(const Rational& c) const;
  // Multiply by v^k.
  Poly shifted(Var v, unsigned k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

// Exact quotient a / b; throws ValidationError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor over Q[t,q,x,u,v], normalized to integer
// coefficients with content 1 and positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

// Positive rational c such that p / c has coprime integer coefficients.
Rational rational_content(const Poly& p);

// True iff coefficient(k) == coefficient(D - k) for 0 <= k <= D. The input
// must be univariate of degree <= D.
bool is_palindrome(const Poly& p, int top_degree);

}  // namespace modrec
