#include <iostream>

#include "modrec/acceptance.hpp"

int main() {
  auto results = modrec::run_acceptance(&std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
