#include "modrec/tamagawa.hpp"

#include <numeric>
#include <string>

#include "modrec/errors.hpp"

namespace modrec {

namespace {

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

struct ConeShape {
  long n = 0;
  std::vector<long> period;  // n n_i n_{i+1}
  std::vector<long> lambda;  // n N_i (n - N_i): codim step per period
};

ConeShape shape_of(const Composition& ranks) {
  if (ranks.size() < 2) throw ValidationError("cone needs at least two parts");
  ConeShape shape;
  for (int nj : ranks) {
    if (nj < 1) throw ValidationError("composition entries must be positive");
    shape.n += nj;
  }
  long partial = 0;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    partial += ranks[i];
    shape.period.push_back(shape.n * ranks[i] * ranks[i + 1]);
    shape.lambda.push_back(shape.n * partial * (shape.n - partial));
  }
  return shape;
}

// Calls visit(mu) for each type whose gaps lie in the box [1, period_i].
template <typename Visit>
void for_each_box_type(const Composition& ranks, long d, const ConeShape& shape, Visit visit) {
  std::vector<long> gaps(shape.period.size(), 1);
  while (true) {
    if (auto mu = type_from_gaps(ranks, d, gaps)) visit(*mu);
    std::size_t i = 0;
    while (i < gaps.size() && gaps[i] == shape.period[i]) gaps[i++] = 1;
    if (i == gaps.size()) return;
    ++gaps[i];
  }
}

Mass box_term(const ConeSum& cone, const HNType& mu, const SpecializationField& field) {
  Mass term = field.q_power(mass_exponent(mu, cone.genus));
  for (const auto& part : mu.parts()) term *= cone.factor(part.rank, mod_floor(part.degree, part.rank));
  return term;
}

Rational numeric_q(const SpecializationField& field) {
  if (field.mode() != FieldMode::numeric) throw ValidationError("tail bounds need a numeric field");
  return field.q().constant_value();
}

Rational binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational as_rational(const Mass& m) {
  if (!m.is_constant()) throw ValidationError("mass is not a number in this field");
  return m.constant_value();
}

void check_field(const SpecializationField& field, int n) {
  if (n < 1) throw ValidationError("rank must be positive");
  if (field.genus() < 2) throw ValidationError("genus must be at least 2");
}

}  // namespace

Mass cone_sum(const ConeSum& cone, long d, const SpecializationField& field) {
  if (cone.ranks.size() == 1) return cone.factor(cone.ranks[0], mod_floor(d, cone.ranks[0]));
  const ConeShape shape = shape_of(cone.ranks);
  Mass box = 0;
  for_each_box_type(cone.ranks, d, shape, [&](const HNType& mu) { box += box_term(cone, mu, field); });
  for (long lambda : shape.lambda) {
    Mass denom = 1 - field.q_power(-lambda);
    if (denom.is_zero()) throw InvariantViolation("cone sum has a geometric ratio equal to 1");
    box *= denom.inverse();
  }
  return box;
}

// With x = 1/q, box point rho and m in N^s, the type at gaps rho + m*period
// has codim c(rho) + m.Lambda and mass T(rho) x^{m.Lambda}. Every Lambda_i >= 1,
// so #{m : m.Lambda = N} <= C(N+s-1, s-1) =: p(N), and for L = M + 1 - c(rho),
//   sum_{m.Lambda >= L} x^{m.Lambda} <= sum_{N >= L} p(N) x^N
//                                     <= p(L) x^L / (1 - x (L+s)/(L+1))
// whenever the ratio is below 1. The full product bounds it in any case.
Rational cone_tail_bound(const ConeSum& cone, long d, const SpecializationField& field, long max_codim) {
  const Rational q = numeric_q(field);
  if (cone.ranks.size() == 1) return 0;
  const ConeShape shape = shape_of(cone.ranks);
  const Rational x = 1 / q;
  const long s = static_cast<long>(shape.lambda.size());
  Rational full = 1;
  for (long lambda : shape.lambda) {
    Rational denom = 1 - pow(x, lambda);
    if (denom <= 0) throw InvariantViolation("cone tail has a geometric ratio >= 1");
    full /= denom;
  }
  Rational bound = 0;
  for_each_box_type(cone.ranks, d, shape, [&](const HNType& mu) {
    Rational term = as_rational(box_term(cone, mu, field));
    long L = max_codim + 1 - codim(mu, cone.genus);
    Rational factor = full;
    if (L > 0) {
      Rational ratio = x * (L + s) / (L + 1);
      if (ratio < 1) {
        Rational estimate = binomial(L + s - 1, s - 1) * pow(x, L) / (1 - ratio);
        if (estimate < factor) factor = estimate;
      }
    }
    bound += term * factor;
  });
  return bound;
}

Mass MassEngine::total_mass(int n) const {
  check_field(field_, n);
  const long g = field_.genus();
  Mass m = field_.numerator_at_one() / (field_.q() - 1);
  m *= field_.q_power((static_cast<long>(n) * n - 1) * (g - 1));
  for (int i = 2; i <= n; ++i) m *= zeta_value(field_, i);
  return m;
}

ConeSum MassEngine::cone(const Composition& ranks) {
  return ConeSum{ranks, field_.genus(), [this](int rank, long residue) { return residue_mass(rank, residue); }};
}

Mass MassEngine::ss_mass(int n, long d) {
  Mass m = total_mass(n);
  for (const auto& ranks : compositions(n))
    if (ranks.size() > 1) m -= cone_sum(cone(ranks), d, field_);
  return m;
}

Mass MassEngine::residue_mass(int n, long residue) {
  const auto key = std::make_pair(n, residue);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  Mass m = ss_mass(n, residue);
  return cache_.emplace(key, std::move(m)).first->second;
}

Mass MassEngine::stratum_mass(const HNType& mu) {
  Mass m = field_.q_power(mass_exponent(mu, field_.genus()));
  for (const auto& part : mu.parts()) m *= residue_mass(part.rank, mod_floor(part.degree, part.rank));
  return m;
}

Mass total_mass(int n, long, const SpecializationField& field) { return MassEngine(field).total_mass(n); }

Mass ss_mass(int n, long d, const SpecializationField& field) { return MassEngine(field).ss_mass(n, d); }

Rational stable_count(int n, long d, const SpecializationField& field) {
  const Rational q = numeric_q(field);
  if (std::gcd(static_cast<long>(n), d) != 1)
    throw ValidationError("stable_count needs gcd(n, d) = 1");
  Rational count = (q - 1) * as_rational(ss_mass(n, d, field));
  if (count < 0 || !is_integer(count))
    throw InvariantViolation("stable count " + to_string(count) + " is not a non-negative integer");
  return count;
}

Rational fixed_determinant_count(int n, long d, const SpecializationField& field) {
  Rational count = stable_count(n, d, field) / as_rational(field.numerator_at_one());
  if (!is_integer(count))
    throw InvariantViolation("fixed-determinant count " + to_string(count) + " is not an integer");
  return count;
}

SiegelReport siegel_check(int n, long d, const SpecializationField& field, long max_codim) {
  numeric_q(field);
  if (max_codim < 0) throw ValidationError("codimension bound must be non-negative");
  MassEngine engine(field);
  SiegelReport report;
  report.n = n;
  report.d = d;
  report.mode = field.mode();
  report.total = as_rational(engine.total_mass(n));

  const auto types = enumerate_types(n, d, field.genus(), max_codim);
  Rational partial = 0;
  std::size_t next = 0;
  for (long m = 0; m <= max_codim; ++m) {
    bool entered = false;
    for (; next < types.size() && codim(types[next], field.genus()) == m; ++next) {
      partial += types[next].is_trivial() ? as_rational(engine.ss_mass(n, d))
                                          : as_rational(engine.stratum_mass(types[next]));
      entered = true;
    }
    Rational gap = report.total - partial;
    if (gap < 0) throw InvariantViolation("Siegel gap is negative at codim " + std::to_string(m));
    if (!report.gaps.empty()) {
      const Rational& before = report.gaps.back();
      if (gap > before || (entered && gap == before))
        throw InvariantViolation("Siegel gaps are not shrinking at codim " + std::to_string(m));
    }
    report.partial_sums.push_back(partial);
    report.gaps.push_back(gap);
  }

  report.tail_bound = 0;
  for (const auto& ranks : compositions(n))
    if (ranks.size() > 1) report.tail_bound += cone_tail_bound(engine.cone(ranks), d, field, max_codim);
  if (report.gaps.back() > report.tail_bound)
    throw InvariantViolation("final Siegel gap " + to_string(report.gaps.back()) + " exceeds the tail bound " +
                             to_string(report.tail_bound));
  return report;
}

Json to_json(const SiegelReport& report) {
  Json partial = Json::array(), gaps = Json::array();
  for (const auto& v : report.partial_sums) partial.push_back(to_string(v));
  for (const auto& v : report.gaps) gaps.push_back(to_string(v));
  return {{"n", report.n},
          {"d", report.d},
          {"mode", std::string(mode_name(report.mode))},
          {"value", to_string(report.total)},
          {"partial_sums", partial},
          {"gaps", gaps},
          {"tail_bound", to_string(report.tail_bound)}};
}

}  // namespace modrec
