#include "modrec/series.hpp"

#include <algorithm>
#include <utility>

#include "modrec/errors.hpp"

namespace modrec {

Series::Series(Var var, unsigned order) : var_(var), order_(order), coeffs_(order + 1) {}

Series::Series(Var var, unsigned order, std::vector<Poly> coeffs)
    : var_(var), order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
  for (const auto& c : coeffs_)
    if (c.uses(var_)) throw ValidationError("series coefficient depends on the series variable");
}

Series Series::from_poly(const Poly& p, Var var, unsigned order) {
  auto coeffs = p.coefficients_in(var);
  if (coeffs.size() > order + 1) coeffs.resize(order + 1);
  return Series(var, order, std::move(coeffs));
}

Rational Series::rational_coefficient(unsigned k) const { return coeffs_.at(k).constant_value(); }

Series Series::truncated(unsigned order) const {
  if (order > order_) throw ValidationError("cannot extend a truncated series");
  return Series(var_, order, std::vector<Poly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::shifted(unsigned k) const {
  Series out(var_, order_);
  for (unsigned i = 0; i + k <= order_; ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

Series Series::scaled(const Poly& c) const {
  Series out = *this;
  for (auto& coeff : out.coeffs_) coeff *= c;
  return out;
}

Series Series::map_coefficients(const std::function<Poly(const Poly&)>& f) const {
  std::vector<Poly> mapped;
  mapped.reserve(coeffs_.size());
  for (const auto& c : coeffs_) mapped.push_back(f(c));
  return Series(var_, order_, std::move(mapped));
}

Poly Series::to_poly() const { return Poly::from_coefficients(var_, coeffs_); }

Series& Series::operator+=(const Series& o) {
  if (o.var_ != var_) throw ValidationError("adding series in different variables");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.var_ != var_) throw ValidationError("subtracting series in different variables");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  if (a.var_ != b.var_) throw ValidationError("multiplying series in different variables");
  unsigned order = std::min(a.order_, b.order_);
  Series out(a.var_, order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series series_expand(const RatFun& f, Var var, unsigned order) {
  auto num = f.num().coefficients_in(var);
  auto den = f.den().coefficients_in(var);
  if (den.empty() || den[0].is_zero())
    throw ValidationError("expansion of " + f.to_string() + " in " + std::string(var_name(var)) +
                          ": denominator vanishes at 0");
  std::vector<Poly> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) {
    Poly acc = k < num.size() ? num[k] : Poly();
    for (unsigned j = 1; j <= k && j < den.size(); ++j) {
      if (den[j].is_zero() || c[k - j].is_zero()) continue;
      acc -= den[j] * c[k - j];
    }
    c[k] = divide_exact(acc, den[0]);
  }
  return Series(var, order, std::move(c));
}

}  // namespace modrec
