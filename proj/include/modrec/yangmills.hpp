#pragma once

#include "modrec/poly.hpp"
#include "modrec/ratfun.hpp"
#include "modrec/series.hpp"

namespace modrec {

inline constexpr unsigned kDefaultTruncationSlack = 4;

// Poincare series of the classifying space of the gauge group:
// prod_{j=1}^n (1 + t^{2j-1})^{2g} / ((1 - t^{2n}) prod_{j=1}^{n-1} (1 - t^{2j})^2).
RatFun classifying_series(int n, int genus);

// Equivariant Poincare series of the semistable stratum, to order T, from
// the recursion over Harder-Narasimhan strata of codimension <= T/2.
// Results are memoized on (n, d, g, T), with d kept as given.
Series ss_equivariant_series(int n, long d, int genus, unsigned order);

// Degree of the moduli space's Poincare polynomial: 2(n^2(g-1)+1).
unsigned moduli_top_degree(int n, int genus);

// P_t(M(n,d)) = (1 - t^2) * ss_equivariant_series for coprime (n, d). The
// series is taken `slack` orders past the top degree; nonzero coefficients
// there, a non-palindromic result or a negative or fractional coefficient
// raise InvariantViolation.
Poly moduli_poincare(int n, long d, int genus, unsigned slack = kDefaultTruncationSlack);

// Fixed-determinant moduli space: moduli_poincare / (1+t)^{2g}.
Poly fixed_determinant_poincare(int n, long d, int genus, unsigned slack = kDefaultTruncationSlack);

}  // namespace modrec
