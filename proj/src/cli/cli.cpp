#include "modrec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "modrec/acceptance.hpp"
#include "modrec/errors.hpp"
#include "modrec/hn.hpp"
#include "modrec/kirwan.hpp"
#include "modrec/matrixdiv.hpp"
#include "modrec/symprod.hpp"
#include "modrec/tamagawa.hpp"
#include "modrec/yangmills.hpp"

namespace modrec::cli {

namespace {

struct Params {
  int n = 1;
  long d = 0;
  int g = 2;
  int e = 0;
  long max_codim = 20;
  unsigned cutoff = 8;
  int index = 2;
  std::string curve;
  std::string mode;
  std::string weights;
  bool hodge = false;
};

struct MathFailure {
  Json document;
  std::string message;
};

// Field accessors for config files, with file and field in every message.
class ConfigReader {
 public:
  ConfigReader(std::string path, const Json& doc) : path_(std::move(path)), doc_(doc) {}

  const Json& field(const std::string& key) const {
    if (!doc_.contains(key)) fail(key, "is required");
    return doc_.at(key);
  }
  bool has(const std::string& key) const { return doc_.contains(key); }
  std::int64_t integer(const std::string& key) const {
    const Json& v = field(key);
    if (!v.is_number_integer()) fail(key, "must be an integer");
    return v.get<std::int64_t>();
  }
  std::vector<std::int64_t> integers(const std::string& key) const {
    const Json& v = field(key);
    if (!v.is_array()) fail(key, "must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) fail(key, "must be an array of integers");
      out.push_back(x.get<std::int64_t>());
    }
    return out;
  }
  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ValidationError(path_ + ": field '" + key + "' " + what);
  }

 private:
  std::string path_;
  const Json& doc_;
};

std::vector<Integer> to_integers(const std::vector<std::int64_t>& v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

unsigned truncation_slack() {
  const char* raw = std::getenv("MODREC_TRUNCATION_SLACK");
  if (!raw || !*raw) return kDefaultTruncationSlack;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > 1000)
    throw ValidationError("MODREC_TRUNCATION_SLACK must be an integer in [0, 1000], got '" + std::string(raw) + "'");
  return static_cast<unsigned>(v);
}

std::vector<long> parse_weights(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }),
             body.end());
  std::vector<long> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw ValidationError("--weights: '" + item + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

// Flattens nested objects/arrays to (dotted key, scalar) pairs in document order.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  auto key = [&](const std::string& k) { return prefix.empty() ? k : prefix + "." + k; };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key(it.key()), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key(std::to_string(i)), rows);
    if (j.empty()) rows.emplace_back(prefix, "");
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

SpecializationField field_for(const Params& p, bool need_numeric) {
  std::string mode = p.mode.empty() ? (p.curve.empty() ? "betti" : "numeric") : p.mode;
  if (mode == "numeric") {
    if (p.curve.empty()) throw ValidationError("numeric mode needs --curve");
    return SpecializationField::numeric(load_curve(p.curve));
  }
  if (need_numeric) throw ValidationError("this subcommand needs a numeric field (--curve)");
  if (mode == "betti") return SpecializationField::betti(p.g);
  if (mode == "hodge") return SpecializationField::hodge(p.g);
  throw ValidationError("--mode must be numeric, betti or hodge, got '" + mode + "'");
}

Json mass_value(const Mass& m) { return m.is_constant() ? to_json(m.constant_value()) : to_json(m); }

using Handler = std::function<Json(const Params&)>;

Json do_betti(const Params& p) {
  const unsigned slack = truncation_slack();
  Poly full = moduli_poincare(p.n, p.d, p.g, slack);
  return {{"n", p.n},
          {"d", p.d},
          {"g", p.g},
          {"degree", moduli_top_degree(p.n, p.g)},
          {"poincare", to_json(full)},
          {"fixed_determinant", to_json(fixed_determinant_poincare(p.n, p.d, p.g, slack))}};
}

Json do_count(const Params& p) {
  return {{"stable_count", to_string(stable_count(p.n, p.d, field_for(p, true)))}};
}

Json do_mass(const Params& p) {
  MassEngine engine(field_for(p, false));
  return {{"n", p.n},
          {"d", p.d},
          {"mode", std::string(mode_name(engine.field().mode()))},
          {"value", mass_value(engine.ss_mass(p.n, p.d))},
          {"total", mass_value(engine.total_mass(p.n))}};
}

Json do_siegel(const Params& p) { return to_json(siegel_check(p.n, p.d, field_for(p, true), p.max_codim)); }

Json do_hn_types(const Params& p) {
  Json types = Json::array();
  for (const auto& mu : enumerate_types(p.n, p.d, p.g, p.max_codim))
    types.push_back({{"type", to_json(mu)}, {"codim", codim(mu, p.g)}, {"mass_exponent", mass_exponent(mu, p.g)}});
  return {{"n", p.n}, {"d", p.d}, {"g", p.g}, {"max_codim", p.max_codim}, {"types", types}};
}

Json do_symprod(const Params& p) {
  int g = p.g;
  std::optional<CurveData> curve;
  if (!p.curve.empty()) {
    curve = load_curve(p.curve);
    g = curve->genus();
  }
  Json doc{{"g", g}, {"n", p.n}, {"poincare", to_json(sym_poincare(g, p.n))}};
  if (p.hodge) doc["hodge"] = to_json(sym_hodge(g, p.n));
  if (curve) doc["count"] = to_string(sym_count(*curve, p.n));
  return doc;
}

Json do_matrixdiv(const Params& p) {
  Json doc{{"n", p.n}, {"e", p.e}, {"g", p.g}, {"poincare", to_json(div_poincare(p.n, p.e, p.g))}};
  if (p.hodge) doc["hodge"] = to_json(div_hodge(p.n, p.e, p.g));
  return doc;
}

Json do_bridge(const Params& p) {
  auto report = div_bridge_check(p.n, p.g, p.e, p.cutoff);
  Json doc = to_json(report);
  if (!report.ok()) throw MathFailure{doc, "matrix-divisor series does not match the classifying series"};
  return doc;
}

Json do_kirwan(const Params& p) {
  WeightSystem w(parse_weights(p.weights));
  Json strata_doc = Json::array();
  for (const auto& s : strata(w)) strata_doc.push_back(to_json(s));
  Json doc{{"weights", to_json(w)}, {"strata", strata_doc}, {"bb", to_json(bb_decomposition(w))}};
  doc["perfection"] = w.has_semistable_points() ? to_json(perfection_check(w)) : Json();
  const auto& ws = w.weights();
  bool stable = w.multiplicity(0) == 0 && std::any_of(ws.begin(), ws.end(), [](long x) { return x > 0; }) &&
                std::any_of(ws.begin(), ws.end(), [](long x) { return x < 0; });
  doc["quotient"] = stable ? to_json(quotient_poincare(w)) : Json();
  return doc;
}

Json do_crosscheck(const Params& p) {
  MassEngine engine(SpecializationField::betti(p.g));
  RatFun counted = (engine.field().q() - 1) * engine.ss_mass(p.n, p.d);
  Poly moduli = moduli_poincare(p.n, p.d, p.g, truncation_slack());
  bool match = counted == RatFun(moduli);
  Json doc{{"n", p.n}, {"d", p.d}, {"g", p.g}, {"match", match}, {"betti_mass", to_json(counted)},
           {"moduli", to_json(moduli)}};
  if (!match) throw MathFailure{doc, "Betti mass and moduli polynomial differ"};
  return doc;
}

Json do_zeta(const Params& p) {
  if (p.curve.empty()) {
    auto field = field_for(p, false);
    return {{"mode", std::string(mode_name(field.mode()))},
            {"g", p.g},
            {"i", p.index},
            {"zeta_value", to_json(zeta_value(field, p.index))}};
  }
  auto curve = load_curve(p.curve);
  Json numerator = Json::array(), counts = Json::array();
  for (const auto& a : curve.numerator()) numerator.push_back(a.get_str());
  for (const auto& c : counts_from_zeta(curve, 2 * curve.genus())) counts.push_back(c.get_str());
  auto field = SpecializationField::numeric(curve);
  return {{"q", curve.q()},
          {"g", curve.genus()},
          {"numerator", numerator},
          {"counts", counts},
          {"jacobian_order", curve.jacobian_order().get_str()},
          {"i", p.index},
          {"zeta_value", to_json(zeta_value(field, p.index).constant_value())}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"betti", do_betti},         {"count", do_count},       {"mass", do_mass},
      {"siegel", do_siegel},       {"hn-types", do_hn_types}, {"symprod", do_symprod},
      {"matrixdiv", do_matrixdiv}, {"bridge", do_bridge},     {"kirwan", do_kirwan},
      {"crosscheck", do_crosscheck}, {"zeta", do_zeta}};
  return table;
}

Json parameters_of(const CLI::App& sub) {
  Json j = Json::object();
  for (const auto* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    auto results = opt->results();
    j[opt->get_name()] = results.size() == 1 ? Json(results.front()) : Json(results);
  }
  return j;
}

}  // namespace

CurveData load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open curve config '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw ValidationError(path + ": curve config must be a JSON object");
  ConfigReader cfg(path, doc);
  const Json& mode_field = cfg.field("mode");
  if (!mode_field.is_string()) cfg.fail("mode", "must be a string");
  const auto mode = mode_field.get<std::string>();
  try {
    if (mode == "counts") {
      auto q = cfg.integer("q");
      auto g = static_cast<int>(cfg.integer("g"));
      auto counts = to_integers(cfg.integers("counts"));
      if (static_cast<int>(counts.size()) < g) cfg.fail("counts", "needs at least g entries");
      auto curve = zeta_from_counts(q, g, std::span<const Integer>(counts.data(), static_cast<std::size_t>(g)));
      auto implied = counts_from_zeta(curve, static_cast<int>(counts.size()));
      if (implied != counts) cfg.fail("counts", "entries beyond the first g disagree with the zeta function");
      return curve;
    }
    if (mode == "numerator") {
      return CurveData::arithmetic(static_cast<int>(cfg.integer("g")), cfg.integer("q"),
                                   to_integers(cfg.integers("numerator")));
    }
    if (mode == "hyperelliptic") {
      HyperellipticModel model;
      model.p = cfg.integer("p");
      model.k = cfg.has("k") ? static_cast<int>(cfg.integer("k")) : 1;
      model.f = cfg.integers("f");
      if (cfg.has("h")) model.h = cfg.integers("h");
      auto curve = curve_from_model(model);
      if (cfg.has("g") && cfg.integer("g") != curve.genus()) cfg.fail("g", "does not match the model's genus");
      return curve;
    }
  } catch (const ValidationError& e) {
    std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ValidationError(path + ": " + what);
  }
  cfg.fail("mode", "must be one of counts, numerator, hyperelliptic");
}

std::string render(const Json& doc, OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump() + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::string out;
  if (format == OutputFormat::csv) {
    out = "key,value\n";
    for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
  } else {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Harder-Narasimhan recursion for moduli of vector bundles on curves", "modrec"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::string format = "json";
  bool selftest = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_flag("--selftest", selftest, "Run the acceptance suite");

  Params p;
  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto n = [&](CLI::App* s) { return s->add_option("--n", p.n, "Rank")->required(); };
  auto d = [&](CLI::App* s) { return s->add_option("--d", p.d, "Degree")->required(); };
  auto g = [&](CLI::App* s) { return s->add_option("--g", p.g, "Genus"); };
  auto curve = [&](CLI::App* s) { return s->add_option("--curve", p.curve, "Curve config (JSON)"); };
  auto mode = [&](CLI::App* s) {
    return s->add_option("--mode", p.mode, "numeric, betti or hodge")
        ->check(CLI::IsMember({"numeric", "betti", "hodge"}));
  };

  auto* betti = add("betti", "Poincare polynomial of the moduli space");
  n(betti), d(betti), g(betti)->required();
  auto* count = add("count", "Number of stable bundles over the curve's base field");
  n(count), d(count), curve(count)->required();
  auto* mass = add("mass", "Semistable and total stacky masses");
  n(mass), d(mass), g(mass), curve(mass), mode(mass);
  auto* siegel = add("siegel", "Partial sums of stratum masses against the total mass");
  n(siegel), d(siegel), curve(siegel)->required();
  siegel->add_option("--max-codim", p.max_codim, "Codimension bound");
  auto* hn_types = add("hn-types", "Harder-Narasimhan types up to a codimension");
  n(hn_types), d(hn_types), g(hn_types)->required();
  hn_types->add_option("--max-codim", p.max_codim, "Codimension bound");
  auto* symprod = add("symprod", "Symmetric powers of the curve");
  n(symprod), g(symprod), curve(symprod);
  symprod->add_flag("--hodge", p.hodge, "Include the Hodge polynomial");
  auto* matrixdiv = add("matrixdiv", "Spaces of matrix divisors");
  n(matrixdiv), g(matrixdiv)->required();
  matrixdiv->add_option("--e", p.e, "Torsion length")->required();
  matrixdiv->add_flag("--hodge", p.hodge, "Include the Hodge polynomial");
  auto* bridge = add("bridge", "Stabilized matrix divisors against the classifying series");
  n(bridge), g(bridge)->required();
  bridge->add_option("--e", p.e, "Torsion length")->required();
  bridge->add_option("--cutoff", p.cutoff, "Highest degree compared");
  auto* kirwan = add("kirwan", "Rank-one torus action on projective space");
  kirwan->add_option("--weights", p.weights, "Comma-separated weights, e.g. 1,1,-1,-1")->required();
  auto* crosscheck = add("crosscheck", "Betti masses against the moduli polynomial");
  n(crosscheck), d(crosscheck), g(crosscheck)->required();
  auto* zeta = add("zeta", "Zeta function data of a curve");
  curve(zeta), g(zeta), mode(zeta);
  zeta->add_option("--i", p.index, "Evaluate zeta_C(i)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  const auto fmt = format == "csv" ? OutputFormat::csv : format == "plain" ? OutputFormat::plain : OutputFormat::json;
  if (selftest) {
    auto results = run_acceptance(&out);
    bool all = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
    return all ? 0 : 2;
  }
  auto subs = app.get_subcommands();
  if (subs.empty()) {
    err << "error: a subcommand is required\n\n" << app.help();
    return 1;
  }

  JobSpec job;
  job.subcommand = subs.front()->get_name();
  job.parameters = parameters_of(*subs.front());
  if (!p.curve.empty()) job.curve_path = p.curve;
  job.format = fmt;
  try {
    out << render(handlers().at(job.subcommand)(p), job.format);
    return 0;
  } catch (const MathFailure& failure) {
    out << render(failure.document, job.format);
    err << "invariant violation: " << failure.message << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace modrec::cli
