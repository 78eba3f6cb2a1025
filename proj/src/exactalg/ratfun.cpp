#include "modrec/ratfun.hpp"

#include <utility>

#include "modrec/errors.hpp"

namespace modrec {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
  normalize(Reduced::no);
}

RatFun::RatFun(Poly num, Poly den, Reduced reduced) : num_(std::move(num)), den_(std::move(den)) {
  normalize(reduced);
}

void RatFun::normalize(Reduced reduced) {
  if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant_value());
    den_ = Poly(1);
    return;
  }
  if (reduced == Reduced::no) {
    Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational c = rational_content(den_);
  if (den_.leading_coefficient() < 0) c = -c;
  if (c != 1) {
    Rational inv = 1 / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw ValidationError("rational function " + to_string() + " is not constant");
  return num_.constant_value();
}

Poly RatFun::as_poly() const {
  if (!is_polynomial()) throw ValidationError("rational function " + to_string() + " is not a polynomial");
  return num_;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize(Reduced::no);
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Reduced::yes);
    return *this;
  }
  Poly b1 = divide_exact(den_, g);
  Poly b2 = divide_exact(o.den_, g);
  Poly n = num_ * b2 + o.num_ * b1;
  Poly d = den_ * b2;
  // Both cofactors are coprime to n, so only g can share a factor with it.
  Poly h = gcd(n, g);
  if (!h.is_constant()) {
    n = divide_exact(n, h);
    d = divide_exact(d, h);
  }
  *this = RatFun(std::move(n), std::move(d), Reduced::yes);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly a = g1.is_constant() ? num_ : divide_exact(num_, g1);
  Poly b = g2.is_constant() ? o.num_ : divide_exact(o.num_, g2);
  Poly c = g2.is_constant() ? den_ : divide_exact(den_, g2);
  Poly d = g1.is_constant() ? o.den_ : divide_exact(o.den_, g1);
  *this = RatFun(a * b, c * d, Reduced::yes);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw ValidationError("division by the zero rational function");
  return RatFun(den_, num_, Reduced::yes);
}

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)),
                Reduced::yes);
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFun substitute(const Poly& p, const Bindings& bindings) {
  std::array<std::vector<RatFun>, kVarCount> powers;
  auto power = [&](Var v, std::uint32_t k) -> const RatFun& {
    auto& cache = powers[static_cast<std::size_t>(v)];
    if (cache.empty()) {
      auto it = bindings.find(v);
      cache.push_back(RatFun(1));
      cache.push_back(it == bindings.end() ? RatFun(Poly::variable(v)) : it->second);
    }
    while (cache.size() <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };
  // Group terms by the monomial in the bound variables so that the unbound
  // part rides along as a polynomial coefficient.
  std::map<Exponents, Poly> grouped;
  for (const auto& [e, c] : p.terms()) {
    Exponents bound{}, free{};
    for (Var v : kAllVars) {
      auto i = static_cast<std::size_t>(v);
      (bindings.count(v) != 0 ? bound : free)[i] = e[i];
    }
    grouped[bound] += Poly::monomial(c, free);
  }
  RatFun out;
  for (const auto& [bound, coeff] : grouped) {
    RatFun term(coeff);
    for (Var v : kAllVars) {
      auto k = bound[static_cast<std::size_t>(v)];
      if (k != 0) term *= power(v, k);
    }
    out += term;
  }
  return out;
}

RatFun substitute(const RatFun& f, const Bindings& bindings) {
  RatFun den = substitute(f.den(), bindings);
  if (den.is_zero())
    throw ValidationError("substitution makes the denominator of " + f.to_string() +
                          " vanish identically");
  return substitute(f.num(), bindings) / den;
}

}  // namespace modrec
