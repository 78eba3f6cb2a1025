#include "modrec/poly.hpp"

#include <algorithm>
#include <sstream>

#include "modrec/errors.hpp"

namespace modrec {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  auto slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_digits(num, true) || !check_digits(den, false))
    throw ValidationError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw ValidationError("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kVarCount> names = {"t", "q", "x", "u", "v"};
  return names[static_cast<std::size_t>(v)];
}

Var parse_var(std::string_view name) {
  for (Var v : kAllVars)
    if (var_name(v) == name) return v;
  throw ValidationError("unknown variable '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::variable(Var v, unsigned power) {
  Exponents e{};
  e[idx(v)] = power;
  return monomial(1, e);
}

Poly Poly::monomial(const Rational& c, const Exponents& e) {
  Poly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

Poly Poly::univariate(Var v, std::span<const Rational> coeffs) {
  Poly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    Exponents e{};
    e[idx(v)] = static_cast<std::uint32_t>(k);
    p.terms_.emplace(e, coeffs[k]);
  }
  return p;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
  Poly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents f = e;
      f[idx(v)] += static_cast<std::uint32_t>(k);
      p.add_term(f, c);
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw ValidationError("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::degree(Var v) const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return static_cast<int>(d);
}

bool Poly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& term) { return term.first[idx(v)] != 0; });
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> out;
  for (Var v : kAllVars)
    if (uses(v)) out.push_back(v);
  return out;
}

bool Poly::is_univariate_in(Var v) const {
  for (Var w : kAllVars)
    if (w != v && uses(w)) return false;
  return true;
}

Rational Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::uint32_t k = f[idx(v)];
    f[idx(v)] = 0;
    out[k].terms_.emplace(f, c);
  }
  return out;
}

std::vector<Rational> Poly::dense(Var v) const {
  if (!is_univariate_in(v))
    throw ValidationError("polynomial " + to_string() + " is not univariate in " +
                          std::string(var_name(v)));
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
  for (const auto& [e, c] : terms_) out[e[idx(v)]] = c;
  return out;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw ValidationError("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

Poly Poly::derivative(Var v) const {
  Poly p;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] == 0) continue;
    Exponents f = e;
    Rational k(f[idx(v)]);
    --f[idx(v)];
    p.terms_.emplace(f, c * k);
  }
  return p;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

Poly Poly::shifted(Var v, unsigned k) const {
  if (k == 0) return *this;
  Poly p;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(v)] += k;
    p.terms_.emplace_hint(p.terms_.end(), f, c);
  }
  return p;
}

Poly Poly::operator-() const { return scaled(-1); }

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.is_zero() || b.is_zero()) return p;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      p.add_term(e, prod);
    }
  }
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool constant = e == Exponents{};
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (constant || mag != 1) {
      os << modrec::to_string(mag);
      wrote = true;
    }
    for (Var v : kAllVars) {
      auto k = e[idx(v)];
      if (k == 0) continue;
      if (wrote) os << "*";
      os << var_name(v);
      if (k > 1) os << "^" << k;
      wrote = true;
    }
  }
  return os.str();
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ValidationError("division by the zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  Poly quotient;
  Poly rest = a;
  while (!rest.is_zero()) {
    Exponents lr = rest.leading_exponents();
    Exponents diff;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (lr[i] < lb[i])
        throw ValidationError("inexact division of " + a.to_string() + " by " + b.to_string());
      diff[i] = lr[i] - lb[i];
    }
    Poly term = Poly::monomial(rest.leading_coefficient() / cb, diff);
    rest -= term * b;
    quotient += term;
  }
  return quotient;
}

Rational rational_content(const Poly& p) {
  if (p.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(num_gcd, den_lcm);
  out.canonicalize();
  return out;
}

bool is_palindrome(const Poly& p, int top_degree) {
  if (p.is_zero()) return true;
  auto vars = p.variables();
  if (vars.size() > 1) throw ValidationError("palindrome test needs a univariate polynomial");
  Var v = vars.empty() ? Var::t : vars.front();
  auto coeffs = p.dense(v);
  if (static_cast<int>(coeffs.size()) - 1 > top_degree)
    throw ValidationError("polynomial degree exceeds the palindrome top degree");
  coeffs.resize(static_cast<std::size_t>(top_degree) + 1);
  for (int k = 0; k <= top_degree; ++k)
    if (coeffs[static_cast<std::size_t>(k)] != coeffs[static_cast<std::size_t>(top_degree - k)])
      return false;
  return true;
}

}  // namespace modrec
