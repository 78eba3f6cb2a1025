#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace modrec {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

// Runs every acceptance criterion in order. A criterion fails if any of its
// checks fails, if it throws, or if it exceeds its time limit. When `log` is
// given, one line per criterion is written as soon as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream* log = nullptr);

std::string format_result(const CriterionResult& r);

}  // namespace modrec
