#pragma once

/// \file sdc.hpp
/// Systems of difference constraints x_a - x_b <= c with exact rational
/// bounds, solved by queue-based Bellman-Ford relaxation.
///
/// Variable 0 is a zero anchor; fixing x = v is the pair of constraints
/// x - anchor <= v and anchor - x <= -v, so fixings need no special casing.

#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/outcome.hpp"
#include "recdual/rational.hpp"

namespace recdual {

inline constexpr int kAnchor = 0;

class Sdc {
 public:
  Sdc() { names_.push_back("0"); }

  int add_variable(std::string name) {
    if (index_.count(name)) throw InvalidInput("duplicate variable " + name);
    index_.emplace(name, variable_count());
    names_.push_back(std::move(name));
    return variable_count() - 1;
  }

  int variable_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_.at(v); }
  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// x_a - x_b <= c.
  void add(int a, int b, Rational c) {
    check(a);
    check(b);
    constraints_.push_back({a, b, c});
  }
  /// x_a - x_b >= c.
  void add_at_least(int a, int b, Rational c) { add(b, a, -c); }
  /// x_a - x_b = c.
  void add_equal(int a, int b, Rational c) {
    add(a, b, c);
    add(b, a, -c);
  }
  void fix(int v, Rational value) { add_equal(v, kAnchor, value); }

  const std::vector<DiffConstraint>& constraints() const { return constraints_; }

  /// One constraint per line, "x_a - x_b <= c"; the anchor prints as 0.
  std::string dump() const {
    std::ostringstream os;
    os << "# " << variable_count() - 1 << " variables, " << constraints_.size() << " constraints\n";
    for (const auto& k : constraints_) os << names_[k.a] << " - " << names_[k.b] << " <= " << k.c << "\n";
    return os.str();
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= variable_count()) throw InvalidInput("constraint references undeclared variable");
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<DiffConstraint> constraints_;
};

struct SdcSolution {
  std::vector<Rational> values;  // indexed by variable, values[kAnchor] == 0

  const Rational& operator[](int v) const { return values[v]; }
};

/// Whether `sol` meets every constraint of `s` exactly.
inline bool satisfies(const Sdc& s, const SdcSolution& sol) {
  if (static_cast<int>(sol.values.size()) != s.variable_count()) return false;
  for (const auto& k : s.constraints())
    if (sol[k.a] - sol[k.b] > k.c) return false;
  return sol[kAnchor] == Rational(0);
}

/// Sum of the bounds of a witness whose constraints chain into a cycle; the
/// left-hand sides telescope to zero, so a negative sum proves infeasibility.
inline std::optional<Rational> witness_total(const std::vector<DiffConstraint>& cycle) {
  if (cycle.empty()) return std::nullopt;
  Rational total(0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const auto& next = cycle[(i + 1) % cycle.size()];
    if (cycle[i].a != next.b) return std::nullopt;
    total += cycle[i].c;
  }
  return total;
}

namespace detail {

/// Edge b -> a of weight c for each constraint; dist starts at 0 everywhere
/// (an implicit source). Returns the constraint indices of a negative cycle,
/// or an empty vector with `dist` holding a solution.
template <class T>
std::vector<int> relax(int nv, const std::vector<DiffConstraint>& cons, const std::vector<T>& w, std::vector<T>& dist) {
  const int m = static_cast<int>(cons.size());
  std::vector<int> start(nv + 1, 0), order(m);
  for (const auto& k : cons) ++start[k.b + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  {
    std::vector<int> pos(start.begin(), start.end() - 1);
    for (int e = 0; e < m; ++e) order[pos[cons[e].b]++] = e;
  }
  dist.assign(nv, T(0));
  std::vector<int> parent(nv, -1), len(nv, 0), stamp(nv, -1);
  std::vector<char> queued(nv, 1);
  std::deque<int> queue(nv);
  std::iota(queue.begin(), queue.end(), 0);
  int walks = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    queued[u] = 0;
    for (int i = start[u]; i < start[u + 1]; ++i) {
      int e = order[i];
      int v = cons[e].a;
      T nd = dist[u] + w[e];
      if (!(nd < dist[v])) continue;
      dist[v] = nd;
      parent[v] = e;
      len[v] = len[u] + 1;
      if (len[v] >= nv) {
        // Any cycle of parent pointers has negative weight.
        ++walks;
        int x = v;
        for (int step = 0; x >= 0 && stamp[x] != walks && step <= nv; ++step) {
          stamp[x] = walks;
          x = parent[x] < 0 ? -1 : cons[parent[x]].b;
        }
        if (x >= 0 && stamp[x] == walks) {
          std::vector<int> cycle;
          int y = x;
          do {
            cycle.push_back(parent[y]);
            y = cons[parent[y]].b;
          } while (y != x);
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
        len[v] = 0;
      }
      if (!queued[v]) {
        queued[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return {};
}

/// Common denominator of all bounds if integer arithmetic on the scaled
/// system cannot overflow.
inline std::optional<std::int64_t> integer_scale(const std::vector<DiffConstraint>& cons, int nv) {
  __int128 scale = 1;
  for (const auto& k : cons) {
    scale = scale / std::gcd(static_cast<std::int64_t>(scale), k.c.den()) * k.c.den();
    if (scale > (static_cast<__int128>(1) << 40)) return std::nullopt;
  }
  __int128 limit = (static_cast<__int128>(1) << 62) / (nv + 1);
  for (const auto& k : cons) {
    __int128 v = static_cast<__int128>(k.c.num()) * (scale / k.c.den());
    if (v > limit || -v > limit) return std::nullopt;
  }
  return static_cast<std::int64_t>(scale);
}

inline Outcome<SdcSolution> solve_constraints(int nv, const std::vector<DiffConstraint>& cons) {
  std::vector<int> cycle;
  SdcSolution sol;
  if (auto scale = integer_scale(cons, nv)) {
    std::vector<std::int64_t> w(cons.size()), dist;
    for (std::size_t e = 0; e < cons.size(); ++e) w[e] = cons[e].c.num() * (*scale / cons[e].c.den());
    cycle = relax(nv, cons, w, dist);
    if (cycle.empty()) {
      sol.values.reserve(nv);
      for (int v = 0; v < nv; ++v) sol.values.emplace_back(dist[v] - dist[kAnchor], *scale);
    }
  } else {
    std::vector<Rational> w(cons.size()), dist;
    for (std::size_t e = 0; e < cons.size(); ++e) w[e] = cons[e].c;
    cycle = relax(nv, cons, w, dist);
    if (cycle.empty()) {
      sol.values.reserve(nv);
      for (int v = 0; v < nv; ++v) sol.values.push_back(dist[v] - dist[kAnchor]);
    }
  }
  if (cycle.empty()) return sol;
  Infeasible inf;
  for (int e : cycle) inf.witness.push_back(cons[e]);
  auto total = witness_total(inf.witness);
  if (!total || *total >= Rational(0)) throw InternalError("negative cycle witness does not telescope");
  inf.reason = "negative cycle of " + std::to_string(cycle.size()) + " constraints, total " + total->str();
  return inf;
}

}  // namespace detail

/// A satisfying assignment with the anchor at 0, or a negative-cycle witness.
/// Integer bounds give integer assignments.
inline Outcome<SdcSolution> solve(const Sdc& s) {
  return detail::solve_constraints(s.variable_count(), s.constraints());
}

struct SdcMinimum {
  Rational value;
  SdcSolution solution;
};

/// Smallest m = lower + k * step (k = 0, 1, ...) with m <= upper such that s
/// together with x_v <= m is feasible, found by binary search over k.
inline Outcome<SdcMinimum> minimize_variable(const Sdc& s, int v, Rational lower, Rational upper,
                                            Rational step = Rational(1)) {
  if (step <= Rational(0)) throw InvalidInput("minimize_variable: step must be positive");
  if (upper < lower) throw InvalidInput("minimize_variable: upper < lower");
  std::vector<DiffConstraint> cons = s.constraints();
  cons.push_back({v, kAnchor, upper});
  auto attempt = [&](const Rational& m) {
    cons.back().c = m;
    return detail::solve_constraints(s.variable_count(), cons);
  };
  auto top = attempt(upper);
  if (!feasible(top)) return std::get<Infeasible>(top);
  Rational span = (upper - lower) / step;
  std::int64_t lo = 0, hi = span.num() / span.den();  // floor, span >= 0
  SdcSolution best = std::get<SdcSolution>(top);
  Rational best_value = upper;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    Rational m = lower + step * Rational(mid);
    auto r = attempt(m);
    if (feasible(r)) {
      hi = mid;
      best = std::get<SdcSolution>(std::move(r));
      best_value = m;
    } else {
      lo = mid + 1;
    }
  }
  Rational m = lower + step * Rational(lo);
  if (m != best_value) {
    auto r = attempt(m);
    if (!feasible(r)) return SdcMinimum{best_value, std::move(best)};
    best = std::get<SdcSolution>(std::move(r));
    best_value = m;
  }
  return SdcMinimum{best_value, std::move(best)};
}

}  // namespace recdual
