#include "modrec/curve.hpp"

#include <algorithm>
#include <string>

#include "modrec/errors.hpp"
#include "modrec/finite_field.hpp"

namespace modrec {

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

Integer zpow(std::int64_t base, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

// Number of Y in F with Y^2 + cY = a.
int quadratic_solutions(const FiniteField& field, FiniteField::Element c, FiniteField::Element a) {
  if (field.characteristic() == 2) {
    if (c == 0) return 1;  // squaring is bijective
    FiniteField::Element inv = field.inverse(c);
    FiniteField::Element z = field.mul(a, field.mul(inv, inv));
    return field.trace_to_f2(z) == 0 ? 2 : 0;
  }
  FiniteField::Element four = field.from_prime_field(4);
  FiniteField::Element disc = field.add(field.mul(c, c), field.mul(four, a));
  return 1 + field.quadratic_character(disc);
}

FiniteField::Element horner(const FiniteField& field, const std::vector<FiniteField::Element>& coeffs,
                            FiniteField::Element x) {
  FiniteField::Element acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
  return acc;
}

FpPoly reversed(const FpPoly& a, int degree) {
  FpPoly out(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(degree) - i] = a[i];
  return out;
}

// Dense rational polynomials for the Sturm computations.
using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly remainder(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

QPoly derivative(const QPoly& a) {
  QPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  trim(out);
  return out;
}

QPoly exact_quotient(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return q;
}

QPoly squarefree_part(const QPoly& a) {
  QPoly g = a, h = derivative(a);
  while (!h.empty()) {
    QPoly r = remainder(g, h);
    g = std::move(h);
    h = std::move(r);
  }
  return exact_quotient(a, g);
}

std::vector<QPoly> sturm_sequence(const QPoly& a) {
  std::vector<QPoly> seq{a, derivative(a)};
  while (!seq.back().empty()) {
    QPoly r = remainder(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<QPoly>& seq, const Rational& x) {
  std::vector<int> signs;
  for (const auto& p : seq) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    signs.push_back(sgn(acc));
  }
  return sign_changes(signs);
}

int changes_at_infinity(const std::vector<QPoly>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& p : seq) {
    int s = sgn(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace

std::int64_t HyperellipticModel::base_field_size() const { return ipow(p, k); }

int HyperellipticModel::genus() const {
  int df = fp::degree(fp::normalized(FpPoly(f.begin(), f.end()), p));
  int dh = fp::degree(fp::normalized(FpPoly(h.begin(), h.end()), p));
  int top = std::max(df, 2 * dh);
  return (top + 1) / 2 - 1;
}

void validate_model(const HyperellipticModel& model) {
  const std::int64_t p = model.p;
  if (p < 2) throw ValidationError("characteristic must be a prime");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
  if (model.k < 1) throw ValidationError("extension exponent k must be >= 1");
  const int g = model.genus();
  if (g < 1) throw ValidationError("model has genus < 1");
  FpPoly f = fp::normalized(FpPoly(model.f.begin(), model.f.end()), p);
  FpPoly h = fp::normalized(FpPoly(model.h.begin(), model.h.end()), p);
  if (fp::degree(h) > g + 1) throw ValidationError("deg h exceeds g + 1");

  if (p != 2) {
    // y^2 + h y = f is smooth iff D = h^2 + 4f is squarefree of degree 2g+1
    // or 2g+2 (the latter bound covers the points at infinity).
    FpPoly disc = fp::add(fp::mul(h, h, p), fp::mul(FpPoly{4}, f, p), p);
    int dd = fp::degree(disc);
    if (dd < 2 * g + 1)
      throw ValidationError("curve is singular at infinity (deg(h^2 + 4f) < 2g + 1)");
    if (fp::degree(fp::gcd(disc, fp::derivative(disc, p), p)) > 0)
      throw ValidationError("curve is singular: h^2 + 4f has a repeated factor");
    return;
  }
  // Characteristic 2: a singular point has h(x0) = 0 and f'(x0)^2 + h'(x0)^2 f(x0) = 0.
  if (h.empty()) throw ValidationError("y^2 = f(x) is singular in characteristic 2; supply h");
  auto singular_locus = [&](const FpPoly& hh, const FpPoly& ff) {
    FpPoly dh = fp::derivative(hh, p), df = fp::derivative(ff, p);
    FpPoly r = fp::add(fp::mul(df, df, p), fp::mul(fp::mul(dh, dh, p), ff, p), p);
    return fp::gcd(hh, r, p);
  };
  if (fp::degree(singular_locus(h, f)) > 0)
    throw ValidationError("affine curve is singular in characteristic 2");
  FpPoly hr = fp::normalized(reversed(h, g + 1), p);
  FpPoly fr = fp::normalized(reversed(f, 2 * g + 2), p);
  FpPoly locus = singular_locus(hr, fr);
  if (fp::degree(locus) > 0 && locus.front() == 0)
    throw ValidationError("curve is singular at infinity in characteristic 2");
}

std::int64_t count_points(const HyperellipticModel& model, int r) {
  if (r < 1) throw ValidationError("extension degree r must be >= 1");
  validate_model(model);
  const int g = model.genus();
  FiniteField field(model.p, model.k * r);
  std::vector<FiniteField::Element> f, h;
  for (auto c : model.f) f.push_back(field.from_prime_field(c));
  for (auto c : model.h) h.push_back(field.from_prime_field(c));
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (!h.empty() && h.back() == 0) h.pop_back();

  std::int64_t count = 0;
  for (FiniteField::Element x = 0; x < field.size(); ++x)
    count += quadratic_solutions(field, horner(field, h, x), horner(field, f, x));

  // Points at infinity: Y^2 + h_{g+1} Y = f_{2g+2}. When deg f = 2g+1 and
  // h_{g+1} = 0 this has the single solution Y = 0, the one ramified point.
  auto coeff = [](const std::vector<FiniteField::Element>& a, int i) {
    return i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)] : FiniteField::Element{0};
  };
  count += quadratic_solutions(field, coeff(h, g + 1), coeff(f, 2 * g + 2));
  return count;
}

void validate_weil(std::int64_t q, int genus, const std::vector<Integer>& a) {
  const int g = genus;
  if (static_cast<int>(a.size()) != 2 * g + 1)
    throw ValidationError("zeta numerator must have degree exactly 2g");
  if (a[0] != 1) throw ValidationError("zeta numerator must satisfy P(0) = 1");
  for (int i = 0; i < g; ++i)
    if (a[static_cast<std::size_t>(2 * g - i)] != zpow(q, g - i) * a[static_cast<std::size_t>(i)])
      throw ValidationError("zeta numerator violates the functional equation at a_" +
                            std::to_string(2 * g - i));
  // |a_1| <= 2g sqrt(q)
  if (a[1] * a[1] > Integer(4 * g * g) * q)
    throw ValidationError("zeta numerator violates the Weil bound |a_1| <= 2g sqrt(q)");

  // P(t) = t^g H(qt + 1/t) with H monic of degree g whose roots are
  // alpha + conj(alpha). Build H from w_j = (qt)^j + t^{-j}, which satisfy
  // w_0 = 2, w_1 = u, w_{j+1} = u w_j - q w_{j-1}.
  std::vector<QPoly> w{QPoly{2}, QPoly{0, 1}};
  for (int j = 1; j < g; ++j) {
    QPoly next(static_cast<std::size_t>(j) + 2, 0);
    for (std::size_t i = 0; i < w[static_cast<std::size_t>(j)].size(); ++i)
      next[i + 1] += w[static_cast<std::size_t>(j)][i];
    for (std::size_t i = 0; i < w[static_cast<std::size_t>(j) - 1].size(); ++i)
      next[i] -= Rational(q) * w[static_cast<std::size_t>(j) - 1][i];
    w.push_back(std::move(next));
  }
  QPoly H(static_cast<std::size_t>(g) + 1, 0);
  H[0] += Rational(a[static_cast<std::size_t>(g)]);
  for (int j = 1; j <= g; ++j)
    for (std::size_t i = 0; i < w[static_cast<std::size_t>(j)].size(); ++i)
      H[i] += Rational(a[static_cast<std::size_t>(g - j)]) * w[static_cast<std::size_t>(j)][i];
  trim(H);

  QPoly S = squarefree_part(H);
  auto seq = sturm_sequence(S);
  int real_roots = changes_at_infinity(seq, false) - changes_at_infinity(seq, true);
  if (real_roots != static_cast<int>(S.size()) - 1)
    throw ValidationError("zeta numerator has reciprocal roots off the circle |alpha| = sqrt(q)");

  // K(w) = prod (w - beta^2) from S(y) S(-y), which is even in y.
  QPoly neg = S;
  for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
  QPoly prod(S.size() + neg.size() - 1, 0);
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < neg.size(); ++j) prod[i + j] += S[i] * neg[j];
  QPoly K;
  for (std::size_t i = 0; i < prod.size(); i += 2) K.push_back(prod[i]);
  trim(K);
  QPoly Ks = squarefree_part(K);
  if (Ks.size() > 1) {
    auto kseq = sturm_sequence(Ks);
    int beyond = changes_at(kseq, Rational(4 * q)) - changes_at_infinity(kseq, true);
    if (beyond != 0)
      throw ValidationError("zeta numerator has reciprocal roots off the circle |alpha| = sqrt(q)");
  }
}

CurveData CurveData::symbolic(int genus) {
  if (genus < 2) throw ValidationError("curve genus must be >= 2");
  return CurveData(genus, std::nullopt, {});
}

CurveData CurveData::arithmetic(int genus, std::int64_t q, std::vector<Integer> numerator) {
  if (genus < 2) throw ValidationError("curve genus must be >= 2");
  if (!is_prime_power(q)) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  validate_weil(q, genus, numerator);
  return CurveData(genus, q, std::move(numerator));
}

std::int64_t CurveData::q() const {
  if (!q_) throw ValidationError("symbolic curve has no base field");
  return *q_;
}

const std::vector<Integer>& CurveData::numerator() const {
  if (!q_) throw ValidationError("symbolic curve has no zeta function");
  return numerator_;
}

Poly CurveData::numerator_poly(Var v) const {
  std::vector<Rational> coeffs(numerator().begin(), numerator().end());
  return Poly::univariate(v, coeffs);
}

Integer CurveData::jacobian_order() const {
  Integer sum = 0;
  for (const auto& c : numerator()) sum += c;
  return sum;
}

CurveData zeta_from_counts(std::int64_t q, int genus, std::span<const Integer> counts) {
  if (genus < 2) throw ValidationError("curve genus must be >= 2");
  if (static_cast<int>(counts.size()) != genus)
    throw ValidationError("expected exactly g = " + std::to_string(genus) + " point counts, got " +
                          std::to_string(counts.size()));
  std::vector<Integer> S(static_cast<std::size_t>(genus) + 1);
  for (int r = 1; r <= genus; ++r)
    S[static_cast<std::size_t>(r)] = zpow(q, r) + 1 - counts[static_cast<std::size_t>(r) - 1];
  std::vector<Integer> a(2 * static_cast<std::size_t>(genus) + 1, 0);
  a[0] = 1;
  // r a_r = -(S_r + sum_{i=1}^{r-1} a_i S_{r-i})
  for (int r = 1; r <= genus; ++r) {
    Integer acc = S[static_cast<std::size_t>(r)];
    for (int i = 1; i < r; ++i) acc += a[static_cast<std::size_t>(i)] * S[static_cast<std::size_t>(r - i)];
    if (acc % r != 0)
      throw ValidationError("point counts are inconsistent with an integral zeta numerator");
    a[static_cast<std::size_t>(r)] = -acc / r;
  }
  for (int i = 0; i < genus; ++i)
    a[static_cast<std::size_t>(2 * genus - i)] = zpow(q, genus - i) * a[static_cast<std::size_t>(i)];
  return CurveData::arithmetic(genus, q, std::move(a));
}

std::vector<Integer> counts_from_zeta(const CurveData& curve, int r_max) {
  const auto& a = curve.numerator();
  auto coeff = [&](int i) { return i < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(i)] : Integer(0); };
  std::vector<Integer> S(static_cast<std::size_t>(r_max) + 1, 0);
  std::vector<Integer> N;
  for (int r = 1; r <= r_max; ++r) {
    Integer acc = -r * coeff(r);
    for (int i = 1; i < r; ++i) acc -= coeff(i) * S[static_cast<std::size_t>(r - i)];
    S[static_cast<std::size_t>(r)] = acc;
    N.push_back(zpow(curve.q(), r) + 1 - acc);
  }
  return N;
}

RatFun zeta_Z(const CurveData& curve, Var v) {
  if (!curve.is_arithmetic()) throw ValidationError("zeta function needs an arithmetic curve");
  Poly x = Poly::variable(v);
  return RatFun(curve.numerator_poly(v), (1 - x) * (1 - Rational(curve.q()) * x));
}

CurveData curve_from_model(const HyperellipticModel& model) {
  validate_model(model);
  const int g = model.genus();
  std::vector<Integer> counts;
  for (int r = 1; r <= g; ++r) counts.emplace_back(static_cast<long>(count_points(model, r)));
  return zeta_from_counts(model.base_field_size(), g, counts);
}

}  // namespace modrec
