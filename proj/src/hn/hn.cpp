#include "modrec/hn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "modrec/errors.hpp"

namespace modrec {

namespace {

void check_genus(int genus) {
  if (genus < 2) throw ValidationError("genus must be at least 2");
}

long pair_rank_sum(const std::vector<int>& ranks) {
  long total = 0, seen = 0;
  for (int n : ranks) {
    total += seen * n;
    seen += n;
  }
  return total;
}

}  // namespace

HNType::HNType(std::vector<HNPart> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("HN type needs at least one part");
  for (const auto& p : parts_)
    if (p.rank < 1) throw ValidationError("HN part rank must be positive");
  for (std::size_t j = 0; j + 1 < parts_.size(); ++j) {
    const auto& a = parts_[j];
    const auto& b = parts_[j + 1];
    if (static_cast<long>(b.rank) * a.degree <= static_cast<long>(a.rank) * b.degree)
      throw ValidationError("HN slopes must be strictly decreasing: " + to_string());
  }
}

int HNType::rank() const {
  int n = 0;
  for (const auto& p : parts_) n += p.rank;
  return n;
}

long HNType::degree() const {
  long d = 0;
  for (const auto& p : parts_) d += p.degree;
  return d;
}

std::vector<Rational> HNType::slope_vector() const {
  std::vector<Rational> out;
  for (const auto& p : parts_) out.insert(out.end(), static_cast<std::size_t>(p.rank), p.slope());
  return out;
}

HNType HNType::twisted(long k) const {
  auto parts = parts_;
  for (auto& p : parts) p.degree += p.rank * k;
  return HNType(std::move(parts));
}

std::string HNType::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) s += ",";
    s += "(" + std::to_string(parts_[j].rank) + "," + std::to_string(parts_[j].degree) + ")";
  }
  return s + "]";
}

std::vector<Composition> compositions(int n) {
  if (n < 1) throw ValidationError("rank must be positive");
  std::vector<Composition> out;
  Composition current;
  std::function<void(int, int)> fill = [&](int remaining, int parts_left) {
    if (parts_left == 1) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
      return;
    }
    for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
      current.push_back(first);
      fill(remaining - first, parts_left - 1);
      current.pop_back();
    }
  };
  for (int length = 1; length <= n; ++length) fill(n, length);
  return out;
}

std::optional<HNType> type_from_gaps(const Composition& ranks, long d, const std::vector<long>& gaps) {
  const std::size_t r = ranks.size();
  if (r == 0 || gaps.size() + 1 != r) throw ValidationError("need one gap between each pair of parts");
  long n = 0;
  for (int nj : ranks) n += nj;
  // d = n s_r + sum_i k_i N_i / (n_i n_{i+1}), then s_j = s_{j+1} + k_j / (n_j n_{j+1}).
  Rational shift = 0;
  long partial = 0;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    partial += ranks[i];
    shift += Rational(gaps[i] * partial) / (static_cast<long>(ranks[i]) * ranks[i + 1]);
  }
  Rational s = (Rational(d) - shift) / n;
  std::vector<HNPart> parts(r);
  for (std::size_t j = r; j-- > 0;) {
    if (j + 1 < r) s += Rational(gaps[j]) / (static_cast<long>(ranks[j]) * ranks[j + 1]);
    Rational dj = s * ranks[j];
    if (!is_integer(dj)) return std::nullopt;
    parts[j] = {ranks[j], dj.get_num().get_si()};
  }
  return HNType(std::move(parts));
}

long codim(const HNType& mu, int genus) {
  check_genus(genus);
  const auto& parts = mu.parts();
  long c = 0;
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t l = j + 1; l < parts.size(); ++l) {
      long nj = parts[j].rank, nl = parts[l].rank;
      c += nl * parts[j].degree - nj * parts[l].degree + nl * nj * (genus - 1);
    }
  return c;
}

long mass_exponent(const HNType& mu, int genus) {
  check_genus(genus);
  const auto& parts = mu.parts();
  long e = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      long ni = parts[i].rank, nj = parts[j].rank;
      e += ni * parts[j].degree - nj * parts[i].degree + ni * nj * (genus - 1);
    }
  return e;
}

// With gaps k_i = n_{i+1} d_i - n_i d_{i+1} >= 1 between consecutive parts,
//   codim = (g-1) sum_{j<l} n_j n_l + sum_i k_i N_i (n - N_i) / (n_i n_{i+1}),
// N_i the partial rank sums, so each composition has a finite box of gaps.
std::vector<HNType> enumerate_types(int n, long d, int genus, long max_codim) {
  check_genus(genus);
  if (n < 1) throw ValidationError("rank must be positive");
  if (max_codim < 0) throw ValidationError("codimension bound must be non-negative");

  std::vector<std::pair<long, HNType>> found;
  for (const auto& ranks : compositions(n)) {
    const std::size_t r = ranks.size();
    if (r == 1) {
      found.emplace_back(0, HNType({{n, d}}));
      continue;
    }
    const Rational base = Rational((genus - 1) * pair_rank_sum(ranks));
    std::vector<Rational> weight(r - 1);
    Rational min_rest = 0;
    long partial = 0;
    for (std::size_t i = 0; i + 1 < r; ++i) {
      partial += ranks[i];
      Rational denom = Rational(static_cast<long>(ranks[i]) * ranks[i + 1]);
      weight[i] = Rational(partial * (n - partial)) / denom;
      min_rest += weight[i];
    }
    if (base + min_rest > max_codim) continue;

    std::vector<long> gaps(r - 1);
    std::function<void(std::size_t, Rational, Rational)> dfs = [&](std::size_t i, Rational used,
                                                                   Rational rest) {
      if (i + 1 == r) {
        if (auto mu = type_from_gaps(ranks, d, gaps)) found.emplace_back(codim(*mu, genus), std::move(*mu));
        return;
      }
      Rational later = rest - weight[i];
      for (long k = 1; used + weight[i] * k + later <= max_codim; ++k) {
        gaps[i] = k;
        dfs(i + 1, used + weight[i] * k, later);
      }
    };
    dfs(0, base, min_rest);
  }
  std::sort(found.begin(), found.end());
  std::vector<HNType> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

Json to_json(const HNType& mu) {
  Json j = Json::array();
  for (const auto& p : mu.parts()) j.push_back({p.rank, p.degree});
  return j;
}

HNType hn_type_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("HN type must be a JSON array of [rank, degree] pairs");
  std::vector<HNPart> parts;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw ValidationError("HN part must be [rank, degree]");
    parts.push_back({p[0].get<int>(), p[1].get<long>()});
  }
  return HNType(std::move(parts));
}

}  // namespace modrec
