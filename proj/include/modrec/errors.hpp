#pragma once

#include <stdexcept>
#include <string>

namespace modrec {

// Bad input or a violated precondition. The CLI maps this to exit status 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity that must hold did not. The CLI maps this to exit
// status 2: it means the computation disagrees with itself, not that the
// input was wrong.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modrec
