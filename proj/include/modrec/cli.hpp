#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "modrec/curve.hpp"
#include "modrec/serialize.hpp"

namespace modrec::cli {

enum class OutputFormat { json, csv, plain };

// One validated invocation: the subcommand, its parameters as given on the
// command line, an optional curve config path and the output format.
struct JobSpec {
  std::string subcommand;
  Json parameters = Json::object();
  std::optional<std::string> curve_path;
  OutputFormat format = OutputFormat::json;
};

// Curve config files are JSON objects with a "mode":
//   {"mode": "counts", "q": 2, "g": 2, "counts": [3, 5]}
//   {"mode": "numerator", "q": 2, "g": 2, "numerator": [1, 0, 0, 0, 4]}
//   {"mode": "hyperelliptic", "p": 2, "k": 1, "f": [0, 0, 0, 0, 0, 1], "h": [1]}
// Any problem is reported as a ValidationError naming the file and field.
CurveData load_curve(const std::string& path);

// Renders a result document. csv and plain flatten nested keys with dots.
std::string render(const Json& doc, OutputFormat format);

// Exit status: 0 success, 1 invalid input, 2 a mathematical identity failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrec::cli
