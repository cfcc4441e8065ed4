#pragma once

/// \file outcome.hpp
/// Result of a decision procedure: a value or a reason why none exists.

#include <string>
#include <variant>
#include <vector>

#include "recdual/rational.hpp"

namespace recdual {

/// x_a - x_b <= c.
struct DiffConstraint {
  int a = 0;
  int b = 0;
  Rational c;

  friend bool operator==(const DiffConstraint&, const DiffConstraint&) = default;
};

struct Infeasible {
  std::string reason;
  /// Constraints around a negative cycle, in cycle order; empty for the
  /// combinatorial methods.
  std::vector<DiffConstraint> witness;
};

template <class T>
using Outcome = std::variant<T, Infeasible>;

template <class T>
bool feasible(const Outcome<T>& o) {
  return std::holds_alternative<T>(o);
}

}  // namespace recdual
