#include "modrec/finite_field.hpp"

#include <algorithm>
#include <string>

#include "modrec/errors.hpp"

namespace modrec {

namespace fp {

namespace {

std::int64_t reduce(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = reduce(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& m, std::int64_t p) {
  FpPoly result{1};
  base = mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

FpPoly normalized(FpPoly a, std::int64_t p) {
  for (auto& c : a) c = reduce(c, p);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return normalized(std::move(out), p);
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return normalized(std::move(out), p);
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return normalized(std::move(out), p);
}

FpPoly mod(FpPoly a, const FpPoly& m, std::int64_t p) {
  if (m.empty()) throw ValidationError("polynomial reduction modulo zero");
  a = normalized(std::move(a), p);
  std::int64_t inv = inverse_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::int64_t c = a.back() * inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[j + shift] = reduce(a[j + shift] - c * m[j], p);
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p) {
  a = normalized(std::move(a), p);
  b = normalized(std::move(b), p);
  while (!b.empty()) {
    FpPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

FpPoly derivative(const FpPoly& a, std::int64_t p) {
  FpPoly out;
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(reduce(a[i] * static_cast<std::int64_t>(i % static_cast<std::size_t>(p)), p));
  return normalized(std::move(out), p);
}

bool is_irreducible(const FpPoly& f, std::int64_t p) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // f is irreducible iff it shares no factor with x^{p^i} - x for i <= n/2.
  FpPoly x{0, 1};
  FpPoly frob = x;
  for (int i = 1; i <= n / 2; ++i) {
    frob = powmod(frob, static_cast<std::uint64_t>(p), f, p);
    if (degree(gcd(f, sub(frob, x, p), p)) > 0) return false;
  }
  return true;
}

FpPoly smallest_irreducible(std::int64_t p, int degree) {
  if (degree < 1) throw ValidationError("field extension degree must be positive");
  if (degree == 1) return FpPoly{0, 1};
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= static_cast<std::uint64_t>(p);
  // Counting up in base p with c_{n-1} as the most significant digit walks
  // the coefficient vectors (c_{n-1}, ..., c_0) in lexicographic order.
  for (std::uint64_t code = 0; code < count; ++code) {
    FpPoly f(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t rest = code;
    for (int i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    f[static_cast<std::size_t>(degree)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(degree) +
                           " over F_" + std::to_string(p));
}

}  // namespace fp

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int degree) : p_(p), degree_(degree) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (degree < 1) throw ValidationError("field degree must be positive");
  std::uint64_t size = 1;
  for (int i = 0; i < degree; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > kMaxSize)
      throw ValidationError("field F_" + std::to_string(p) + "^" + std::to_string(degree) +
                            " exceeds the 2^20 element limit");
  }
  size_ = static_cast<std::uint32_t>(size);
  modulus_ = fp::smallest_irreducible(p, degree);

  const std::uint32_t order = size_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Element a, std::uint32_t e) {
    Element result = 1;
    while (e > 0) {
      if (e & 1U) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1U;
    }
    return result;
  };
  Element generator = 0;
  for (Element g = 1; g < size_ && generator == 0; ++g) {
    bool primitive = std::all_of(factors.begin(), factors.end(),
                                 [&](std::uint32_t l) { return slow_pow(g, order / l) != 1; });
    if (primitive) generator = g;
  }
  if (generator == 0) throw InvariantViolation("no multiplicative generator found");

  exp_.resize(order);
  log_.assign(size_, 0);
  Element value = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = value;
    log_[value] = i;
    value = slow_mul(value, generator);
  }

  if (p_ == 2) {
    for (int b = 0; b < degree_; ++b) {
      Element basis = Element{1} << b;
      Element acc = 0, power = basis;
      for (int i = 0; i < degree_; ++i) {
        acc ^= power;
        power = mul(power, power);
      }
      basis_trace_.push_back(static_cast<int>(acc));  // acc lies in F_2
    }
  }
}

FiniteField::Element FiniteField::slow_mul(Element a, Element b) const {
  FpPoly pa, pb;
  for (Element r = a; r != 0; r /= static_cast<Element>(p_)) pa.push_back(r % p_);
  for (Element r = b; r != 0; r /= static_cast<Element>(p_)) pb.push_back(r % p_);
  FpPoly prod = fp::mod(fp::mul(pa, pb, p_), modulus_, p_);
  Element out = 0;
  for (auto it = prod.rbegin(); it != prod.rend(); ++it)
    out = out * static_cast<Element>(p_) + static_cast<Element>(*it);
  return out;
}

FiniteField::Element FiniteField::from_prime_field(std::int64_t c) const {
  c %= p_;
  return static_cast<Element>(c < 0 ? c + p_ : c);
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0, place = 1;
  const auto p = static_cast<Element>(p_);
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0, place = 1;
  const auto p = static_cast<Element>(p_);
  while (a != 0) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t order = size_ - 1;
  std::uint32_t e = log_[a] + log_[b];
  if (e >= order) e -= order;
  return exp_[e];
}

FiniteField::Element FiniteField::inverse(Element a) const {
  if (a == 0) throw ValidationError("inverse of zero in a finite field");
  const std::uint32_t order = size_ - 1;
  return exp_[log_[a] == 0 ? 0 : order - log_[a]];
}

int FiniteField::quadratic_character(Element a) const {
  if (p_ == 2) throw ValidationError("quadratic character needs odd characteristic");
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

int FiniteField::trace_to_f2(Element a) const {
  if (p_ != 2) throw ValidationError("trace to F_2 needs characteristic 2");
  int acc = 0;
  for (int b = 0; b < degree_; ++b)
    if ((a >> b) & 1U) acc ^= basis_trace_[static_cast<std::size_t>(b)];
  return acc;
}

}  // namespace modrec
