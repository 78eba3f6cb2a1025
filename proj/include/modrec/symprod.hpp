#pragma once

#include <vector>

#include "modrec/curve.hpp"
#include "modrec/poly.hpp"

namespace modrec {

// Poincare polynomial of C^{(n)}: coefficient of x^n in
// (1 + x t)^{2g} / ((1 - x)(1 - x t^2)).
Poly sym_poincare(int genus, int n);
// sym_poincare(genus, k) for k = 0..n_max.
std::vector<Poly> sym_poincare_table(int genus, int n_max);

// Hodge polynomial of C^{(n)}: coefficient of x^n in
// (1 + x u)^g (1 + x v)^g / ((1 - x)(1 - x u v)).
Poly sym_hodge(int genus, int n);
std::vector<Poly> sym_hodge_table(int genus, int n_max);

// |C^{(n)}(F_q)|, the coefficient of x^n in Z_C(x).
Rational sym_count(const CurveData& curve, int n);

// Effective divisors of degree n counted as multisets of closed points, with
// closed points of each degree obtained by Moebius inversion from fresh point
// counts N_1..N_n. Requires n <= 6 and q^n <= 2^20.
Integer divisor_enumerate(const HyperellipticModel& model, int n);

}  // namespace modrec
