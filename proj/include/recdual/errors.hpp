#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace recdual {

/// Malformed or inconsistent input (bad rotation, unknown vertex, a partial
/// dual contradicting the labeling, ...). Distinct from "infeasible".
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A geometric representation that is not the contact representation it
/// claims to be.
class InvalidDual : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Broken internal invariant; never expected on validated input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
};

}  // namespace recdual
