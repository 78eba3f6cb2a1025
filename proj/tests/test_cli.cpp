#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "modrec/cli.hpp"
#include "modrec/errors.hpp"
#include "modrec/yangmills.hpp"

using namespace modrec;
using namespace modrec::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("modrec_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const Poly t = Poly::variable(Var::t);

}  // namespace

TEST_CASE("betti emits the moduli polynomial") {
  auto r = invoke({"betti", "--n", "2", "--d", "1", "--g", "2"});
  REQUIRE(r.status == 0);
  auto doc = Json::parse(r.out);
  Poly fixed = 1 + t.pow(2) + 4 * t.pow(3) + t.pow(4) + t.pow(6);
  CHECK(poly_from_json(doc["poincare"]) == (1 + t).pow(4) * fixed);
  CHECK(poly_from_json(doc["fixed_determinant"]) == fixed);
  CHECK(doc["poincare"]["coeffs"][0] == "1");
}

TEST_CASE("count on the genus-2 curve over F_2") {
  auto r = invoke({"count", "--n", "2", "--d", "1", "--curve", "curves/g2q2.json"});
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out) == Json{{"stable_count", "75"}});
  auto model = invoke({"count", "--n", "2", "--d", "-1", "--curve", "curves/g2q2_model.json"});
  CHECK(Json::parse(model.out) == Json{{"stable_count", "75"}});
}

TEST_CASE("crosscheck matches") {
  auto r = invoke({"crosscheck", "--n", "3", "--d", "1", "--g", "2"});
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["match"] == true);
}

TEST_CASE("other subcommands") {
  auto mass = Json::parse(invoke({"mass", "--n", "2", "--d", "1", "--curve", "curves/g2q2.json"}).out);
  CHECK(mass["value"] == "75");
  CHECK(mass["total"] == "325/3");
  auto betti_mass = Json::parse(invoke({"mass", "--n", "2", "--d", "1", "--g", "2", "--mode", "betti"}).out);
  CHECK(ratfun_from_json(betti_mass["value"]) * RatFun(t.pow(2) - 1) == RatFun(moduli_poincare(2, 1, 2)));

  auto siegel = Json::parse(invoke({"siegel", "--n", "2", "--d", "1", "--curve", "curves/g2q2.json"}).out);
  CHECK(siegel["partial_sums"].size() == 21);
  CHECK(siegel["value"] == "325/3");

  auto types = Json::parse(invoke({"hn-types", "--n", "2", "--d", "1", "--g", "2", "--max-codim", "6"}).out);
  CHECK(types["types"].size() == 4);
  CHECK(types["types"][1]["type"].dump() == "[[1,1],[1,0]]");

  auto sym = Json::parse(invoke({"symprod", "--n", "2", "--curve", "curves/g2q2_model.json", "--hodge"}).out);
  CHECK(sym["count"] == "7");
  CHECK(poly_from_json(sym["poincare"]) == 1 + 4 * t + 7 * t.pow(2) + 4 * t.pow(3) + t.pow(4));
  CHECK(sym.contains("hodge"));

  auto div = Json::parse(invoke({"matrixdiv", "--n", "2", "--e", "1", "--g", "2"}).out);
  CHECK(poly_from_json(div["poincare"]) == (1 + t.pow(2)) * (1 + 4 * t + t.pow(2)));

  auto bridge = invoke({"bridge", "--n", "2", "--g", "2", "--e", "30", "--cutoff", "8"});
  CHECK(bridge.status == 0);
  CHECK(Json::parse(bridge.out)["match"] == true);

  auto kirwan = Json::parse(invoke({"kirwan", "--weights", "1,1,-1,-1"}).out);
  CHECK(poly_from_json(kirwan["quotient"]) == 1 + 2 * t.pow(2) + t.pow(4));
  auto with_zero = Json::parse(invoke({"kirwan", "--weights", "[0, 1, -1]"}).out);
  CHECK(with_zero["quotient"].is_null());

  auto zeta = Json::parse(invoke({"zeta", "--curve", "curves/g2q2.json"}).out);
  CHECK(zeta["numerator"].dump() == R"(["1","0","0","0","4"])");
  CHECK(zeta["zeta_value"] == "65/24");
  CHECK(zeta["jacobian_order"] == "5");
}

TEST_CASE("load_curve modes") {
  auto counts = load_curve("curves/g2q2.json");
  CHECK(counts.numerator() == std::vector<Integer>{1, 0, 0, 0, 4});
  auto model = load_curve("curves/g2q2_model.json");
  CHECK(model.numerator() == counts.numerator());
  CHECK(load_curve("curves/g2q2_numerator.json").numerator() == counts.numerator());
  CHECK(load_curve("curves/g2q3_model.json").q() == 3);

  auto extra = write_temp("extra.json", R"({"mode": "counts", "q": 2, "g": 2, "counts": [3, 5, 9, 33]})");
  CHECK(load_curve(extra).numerator() == counts.numerator());
  auto wrong_extra = write_temp("wrong_extra.json", R"({"mode": "counts", "q": 2, "g": 2, "counts": [3, 5, 10]})");
  CHECK_THROWS_AS(load_curve(wrong_extra), ValidationError);
}

TEST_CASE("load_curve rejections carry the field") {
  auto expect_message = [](const std::string& body, const std::string& fragment) {
    auto path = write_temp("bad.json", body);
    try {
      load_curve(path);
      FAIL("accepted " << body);
    } catch (const ValidationError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
  };
  expect_message(R"({"mode": "counts", "q": 2, "g": 2, "counts": [9, 5]})", "bad.json");
  expect_message(R"({"mode": "counts", "q": 2, "g": 2})", "'counts'");
  expect_message(R"({"mode": "counts", "q": "two", "g": 2, "counts": [3, 5]})", "'q'");
  expect_message(R"({"mode": "elliptic"})", "'mode'");
  expect_message(R"({"mode": "hyperelliptic", "p": 2, "f": [1, 1, 0, 0, 0, 1], "h": [0, 1], "g": 2})", "bad.json");
  expect_message(R"([1, 2])", "JSON object");
  expect_message(R"({"mode": )", "malformed");
  CHECK_THROWS_AS(load_curve("curves/does_not_exist.json"), ValidationError);
}

TEST_CASE("exit codes and usage") {
  auto unknown = invoke({"bogus"});
  CHECK(unknown.status == 1);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(invoke({}).status == 1);
  CHECK(invoke({"betti", "--n", "2"}).status == 1);
  CHECK(invoke({"betti", "--n", "2", "--d", "2", "--g", "2"}).status == 1);
  auto bad_curve = write_temp("weil.json", R"({"mode": "counts", "q": 2, "g": 2, "counts": [9, 5]})");
  CHECK(invoke({"count", "--n", "2", "--d", "1", "--curve", bad_curve}).status == 1);
  CHECK(invoke({"count", "--n", "2", "--d", "1", "--curve", "curves/missing.json"}).status == 1);
  CHECK(invoke({"--format", "xml", "betti", "--n", "2", "--d", "1", "--g", "2"}).status == 1);
  CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("truncation slack from the environment") {
  ::setenv("MODREC_TRUNCATION_SLACK", "10", 1);
  auto wide = invoke({"betti", "--n", "3", "--d", "1", "--g", "2"});
  ::setenv("MODREC_TRUNCATION_SLACK", "-3", 1);
  auto bad = invoke({"betti", "--n", "2", "--d", "1", "--g", "2"});
  ::unsetenv("MODREC_TRUNCATION_SLACK");
  auto normal = invoke({"betti", "--n", "3", "--d", "1", "--g", "2"});
  CHECK(wide.status == 0);
  CHECK(wide.out == normal.out);
  CHECK(bad.status == 1);
}

TEST_CASE("formats are deterministic and JSON round-trips") {
  const std::vector<std::vector<std::string>> jobs{
      {"betti", "--n", "3", "--d", "2", "--g", "2"},
      {"mass", "--n", "2", "--d", "1", "--g", "2", "--mode", "hodge"},
      {"siegel", "--n", "3", "--d", "1", "--curve", "curves/g2q2.json", "--max-codim", "8"},
      {"kirwan", "--weights", "2,1,-1,-3"},
      {"zeta", "--g", "3", "--mode", "betti", "--i", "3"}};
  for (const auto& job : jobs) {
    auto first = invoke(job);
    REQUIRE(first.status == 0);
    CHECK(invoke(job).out == first.out);
    auto doc = Json::parse(first.out);
    CHECK(Json::parse(doc.dump()) == doc);
    CHECK(render(doc, OutputFormat::json) == first.out);
  }
  auto csv = invoke({"--format", "csv", "hn-types", "--n", "2", "--d", "1", "--g", "2", "--max-codim", "2"});
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  CHECK(csv.out.find("types.1.codim,2\n") != std::string::npos);
  auto plain = invoke({"count", "--n", "2", "--d", "1", "--curve", "curves/g2q2.json", "--format", "plain"});
  CHECK(plain.out == "stable_count  75\n");
  CHECK(render(Json{{"a", "x,\"y\""}}, OutputFormat::csv) == "key,value\na,\"x,\"\"y\"\"\"\n");
}
