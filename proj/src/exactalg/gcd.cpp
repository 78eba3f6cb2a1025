#include <algorithm>
#include <utility>
#include <vector>

#include "modrec/errors.hpp"
#include "modrec/poly.hpp"

namespace modrec {

namespace {

// Dense integer polynomials, ascending coefficients, no trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Sparse pseudo-remainder: a multiple of prem(a, b) by a power of lc(b).
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lcb = b.back();
  Integer lca, tmp;
  while (!a.empty() && a.size() - 1 >= db) {
    lca = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lcb;
    for (std::size_t j = 0; j <= db; ++j) {
      tmp = lca * b[j];
      a[j + shift] -= tmp;
    }
    trim(a);
  }
  return a;
}

ZPoly univariate_gcd(ZPoly a, ZPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return ZPoly{1};
    ZPoly r = pseudo_remainder(std::move(a), b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZPoly to_integer_dense(const Poly& p, Var v) {
  auto dense = p.dense(v);
  Integer den_lcm = 1;
  for (const auto& c : dense) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(dense.size());
  for (std::size_t k = 0; k < dense.size(); ++k) {
    Rational scaled = dense[k] * den_lcm;
    out[k] = scaled.get_num();
  }
  trim(out);
  return out;
}

Poly from_integer_dense(const ZPoly& p, Var v) {
  std::vector<Rational> coeffs(p.begin(), p.end());
  return Poly::univariate(v, coeffs);
}

// Integer coefficients, content 1, positive leading coefficient.
Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading_coefficient() < 0) c = -c;
  return p.scaled(1 / c);
}

Poly content_in(const Poly& p, Var v);

Poly primitive_part_in(const Poly& p, Var v) { return divide_exact(p, content_in(p, v)); }

Poly pseudo_remainder_in(const Poly& a, const Poly& b, Var v) {
  auto ac = a.coefficients_in(v);
  auto bc = b.coefficients_in(v);
  const std::size_t db = bc.size() - 1;
  const Poly lcb = bc.back();
  while (!ac.empty() && ac.size() - 1 >= db) {
    Poly lca = ac.back();
    std::size_t shift = ac.size() - 1 - db;
    for (auto& c : ac) c *= lcb;
    for (std::size_t j = 0; j <= db; ++j) ac[j + shift] -= lca * bc[j];
    while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
  }
  return Poly::from_coefficients(v, ac);
}

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g.is_zero() ? Poly(1) : g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return normalized(a);

  std::vector<Var> vars;
  for (Var v : kAllVars)
    if (a.uses(v) || b.uses(v)) vars.push_back(v);

  if (vars.size() == 1) {
    Var v = vars.front();
    return normalized(from_integer_dense(
        univariate_gcd(to_integer_dense(a, v), to_integer_dense(b, v)), v));
  }

  const Var v = vars.front();
  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly pa = divide_exact(a, ca);
  Poly pb = divide_exact(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

  Poly g;
  while (true) {
    if (pb.is_zero()) {
      g = primitive_part_in(pa, v);
      break;
    }
    if (pb.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    Poly r = pseudo_remainder_in(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part_in(r, v);
  }
  return normalized(gcd(ca, cb) * g);
}

}  // namespace modrec
