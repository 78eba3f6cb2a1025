#pragma once

#include <optional>
#include <vector>

#include "modrec/poly.hpp"
#include "modrec/serialize.hpp"

namespace modrec {

// Spaces of matrix divisors of rank n and torsion length e. The torus fixed
// loci are products C^{(d_1)} x ... x C^{(d_n)} with |d| = e, attached in
// degree 2 c_d, c_d = sum_i (i-1) d_i.
Poly div_poincare(int n, int e, int genus);
Poly div_hodge(int n, int e, int genus);

struct BridgeReport {
  int n = 1;
  int genus = 2;
  int e = 0;
  unsigned cutoff = 0;
  std::vector<Rational> coefficients;       // t^0..t^K at e
  std::vector<Rational> next_coefficients;  // t^0..t^K at e+1
  std::vector<Rational> classifying;        // t^0..t^K of the classifying series
  std::optional<unsigned> first_unstable;   // first k where e and e+1 differ
  std::optional<unsigned> first_mismatch;   // first k where e and the classifying series differ

  bool ok() const { return !first_unstable && !first_mismatch; }
};

// Compares the low coefficients of div_poincare(n, e, g) with e+1 and with the
// classifying series. Needs e >= K + 2 g n.
BridgeReport div_bridge_check(int n, int genus, int e, unsigned cutoff);

Json to_json(const BridgeReport& report);

}  // namespace modrec
