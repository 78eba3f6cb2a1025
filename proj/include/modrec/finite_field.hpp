#pragma once

#include <cstdint>
#include <vector>

namespace modrec {

// Polynomials over F_p, ascending coefficients in [0, p), no trailing zeros.
using FpPoly = std::vector<std::int64_t>;

namespace fp {

FpPoly normalized(FpPoly a, std::int64_t p);
FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly mod(FpPoly a, const FpPoly& m, std::int64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p);
FpPoly derivative(const FpPoly& a, std::int64_t p);
int degree(const FpPoly& a);
bool is_irreducible(const FpPoly& f, std::int64_t p);

// The monic irreducible of the given degree whose coefficient vector
// (c_{n-1}, ..., c_0) is lexicographically smallest.
FpPoly smallest_irreducible(std::int64_t p, int degree);

}  // namespace fp

// F_{p^n} with n >= 1 and p^n <= 2^20. Elements are encoded as integers in
// [0, p^n) whose base-p digits are the coefficients of a polynomial modulo
// smallest_irreducible(p, n). Multiplication goes through discrete log tables.
class FiniteField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint32_t kMaxSize = 1U << 20;

  FiniteField(std::int64_t p, int degree);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::uint32_t size() const { return size_; }
  const FpPoly& modulus() const { return modulus_; }

  Element from_prime_field(std::int64_t c) const;
  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inverse(Element a) const;

  // Legendre symbol generalization: 0, 1 or -1. Odd characteristic only.
  int quadratic_character(Element a) const;
  // Absolute trace to F_2. Characteristic 2 only.
  int trace_to_f2(Element a) const;

 private:
  Element slow_mul(Element a, Element b) const;

  std::int64_t p_;
  int degree_;
  std::uint32_t size_;
  FpPoly modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<int> basis_trace_;
};

}  // namespace modrec
