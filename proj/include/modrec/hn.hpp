#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "modrec/rational.hpp"
#include "modrec/serialize.hpp"

namespace modrec {

struct HNPart {
  int rank = 1;
  long degree = 0;

  Rational slope() const { return Rational(degree) / rank; }
  auto operator<=>(const HNPart&) const = default;
};

// Harder-Narasimhan type: parts (n_j, d_j) with strictly decreasing slopes.
class HNType {
 public:
  explicit HNType(std::vector<HNPart> parts);

  const std::vector<HNPart>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool is_trivial() const { return parts_.size() == 1; }
  int rank() const;
  long degree() const;
  // The same type as n slopes, each part repeated rank times.
  std::vector<Rational> slope_vector() const;
  // Tensoring by a degree-k line bundle: d_j -> d_j + n_j k.
  HNType twisted(long k) const;
  std::string to_string() const;

  auto operator<=>(const HNType&) const = default;

 private:
  std::vector<HNPart> parts_;
};

using Composition = std::vector<int>;

// All compositions of n, ordered by length then lexicographically.
std::vector<Composition> compositions(int n);

long codim(const HNType& mu, int genus);
long mass_exponent(const HNType& mu, int genus);

// The type with ranks `ranks`, total degree d and consecutive slope gaps
// k_i = n_{i+1} d_i - n_i d_{i+1} = gaps[i], if its degrees are integers.
std::optional<HNType> type_from_gaps(const Composition& ranks, long d, const std::vector<long>& gaps);

// Every type of rank n and degree d with codim <= max_codim, sorted by
// (codim, parts).
std::vector<HNType> enumerate_types(int n, long d, int genus, long max_codim);

Json to_json(const HNType& mu);
HNType hn_type_from_json(const Json& j);

}  // namespace modrec
