#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modrec {

// Arbitrary-precision rationals, always kept canonical (gcd 1, positive
// denominator) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws ValidationError on anything else or a zero
// denominator.
Rational parse_rational(std::string_view text);

// r^e for any integer e; 0^e with e < 0 throws ValidationError.
Rational pow(const Rational& r, long e);

bool is_integer(const Rational& r);

}  // namespace modrec
