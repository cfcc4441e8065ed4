// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include <time.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "recdual/boundary_graph.hpp"
#include "recdual/generators.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/path_set.hpp"
#include "recdual/sdc.hpp"
#include "recdual/verify.hpp"

using namespace recdual;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int digits = 2) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << v;
  return os.str();
}

int graph_size(int i) { return 5 + i * 195 / 99; }

// ---------------------------------------------------------------------------

Verdict rel_round_trip() {
  const auto t0 = std::chrono::steady_clock::now();
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    PlaneGraph g = generate_ptp(graph_size(i), 1000 + i);
    Rel rel = compute_rel(g);
    Dual d = compute_dual(g, rel, false);
    if (extract_rel_from_dual(g, d) == rel && check_contact_rep(g, d).ok()) ++ok;
  }
  const double t = seconds_since(t0);
  return {ok == 100 && t < 60, std::to_string(ok) + "/100 graphs with n <= 200, " + fmt(t) + " s"};
}

Verdict integer_size_bound() {
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = graph_size(i);
    PlaneGraph g = generate_ptp(n, 1000 + i);
    Rel rel = compute_rel(g);
    Dual d = compute_dual(g, rel, true);
    Rect b = d.bounding_box();
    if (b.x2 - b.x1 <= Rational(n) && b.y2 - b.y1 <= Rational(n) && check_realizes(g, rel, d).ok()) ++ok;
  }
  auto size = [](const PlaneGraph& g, const Rel& rel) {
    Rect b = compute_dual(g, rel, true).bounding_box();
    return std::make_pair(static_cast<int>((b.x2 - b.x1).num()), static_cast<int>((b.y2 - b.y1).num()));
  };
  auto m0 = size(fixtures::g0(), fixtures::rel0());
  auto m1 = size(fixtures::g1(), fixtures::rel1());
  auto b0 = oracle::brute_force_min_size(fixtures::g0(), fixtures::rel0(), 5);
  auto b1 = oracle::brute_force_min_size(fixtures::g1(), fixtures::rel1(), 6);
  const bool small = m0 == b0 && m1 == b1 && b0 == std::make_pair(3, 3) && b1 == std::make_pair(4, 3);
  return {ok == 100 && small, std::to_string(ok) + "/100 within n x n; pinwheel " + std::to_string(m0.first) + "x" +
                                  std::to_string(m0.second) + ", six-vertex graph " + std::to_string(m1.first) + "x" +
                                  std::to_string(m1.second) + " (exhaustive search agrees: " +
                                  (small ? "yes" : "no") + ")"};
}

struct Case {
  Instance in;
  bool adversarial;
};

// Half sampled from a computed dual, half with moved rectangles.
const std::vector<Case>& corpus() {
  static const std::vector<Case> cases = [] {
    std::vector<Case> out;
    for (int i = 0; i < 100; ++i)
      out.push_back({sample_instance(12 + (i * 7) % 70, 1 + i % 8, 5000 + i, i % 5 != 0), false});
    for (int i = 0; i < 100; ++i)
      out.push_back({adversarial_instance(12 + (i * 11) % 60, 2 + i % 7, 9000 + i, 1 + i % 3), true});
    return out;
  }();
  return cases;
}

bool valid_extension(const Instance& in, const Outcome<Dual>& r) {
  const Dual& d = std::get<Dual>(r);
  return extends(d, in.partial) && check_contact_rep(in.graph, d).ok() && check_realizes(in.graph, in.rel, d).ok();
}

Outcome<Dual> via_paths(const Instance& in) {
  auto ps = compute_boundary_path_set(in.graph, in.rel, in.partial);
  if (!feasible(ps)) return std::get<Infeasible>(ps);
  return extend_from_path_set(in.graph, in.rel, std::get<BoundaryPathSet>(ps));
}

Verdict three_way_agreement() {
  int agree = 0, yes = 0, no = 0;
  for (const Case& c : corpus()) {
    const Instance& in = c.in;
    bool lp = feasible(extend_via_lp(in.graph, in.rel, in.partial));
    bool paths = feasible(compute_boundary_path_set(in.graph, in.rel, in.partial));
    bool fast = feasible(decide_and_extend(in.graph, in.rel, in.partial));
    if (lp == paths && paths == fast) ++agree;
    (lp ? yes : no)++;
  }
  const int total = static_cast<int>(corpus().size());
  return {agree == total && yes > 0 && no > 0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(yes) + " extendable, " +
              std::to_string(no) + " not)"};
}

Verdict extension_validity() {
  int checked = 0, ok = 0;
  for (const Case& c : corpus()) {
    const Instance& in = c.in;
    for (const auto& r : {extend_via_lp(in.graph, in.rel, in.partial), via_paths(in),
                          decide_and_extend(in.graph, in.rel, in.partial)}) {
      if (!feasible(r)) continue;
      ++checked;
      if (valid_extension(in, r)) ++ok;
    }
  }
  return {checked > 0 && ok == checked, std::to_string(ok) + "/" + std::to_string(checked) + " extensions valid"};
}

Verdict order_invariance() {
  std::vector<Instance> yes, no;
  for (std::uint64_t seed = 0; yes.size() < 100 || no.size() < 50; ++seed) {
    Instance in = adversarial_instance(15 + static_cast<int>(seed % 40), 2 + static_cast<int>(seed % 6), 20000 + seed,
                                       1 + static_cast<int>(seed % 3));
    bool f = feasible(extend_via_lp(in.graph, in.rel, in.partial));
    auto& bucket = f ? yes : no;
    if (bucket.size() < (f ? 100u : 50u)) bucket.push_back(std::move(in));
    if (seed > 20000) break;
  }
  int kept = 0, runs = 0;
  for (const auto* group : {&yes, &no}) {
    const bool want = group == &yes;
    for (std::size_t i = 0; i < group->size(); ++i) {
      const Instance& in = (*group)[i];
      for (std::uint64_t k = 0; k < 5; ++k) {
        PartialDual q = order_perturb(in.partial, i * 5 + k);
        ++runs;
        if (feasible(decide_and_extend(in.graph, in.rel, q)) == want &&
            feasible(extend_via_lp(in.graph, in.rel, q)) == want)
          ++kept;
      }
    }
  }
  return {yes.size() == 100 && no.size() == 50 && kept == runs,
          std::to_string(kept) + "/" + std::to_string(runs) + " perturbed verdicts unchanged over " +
              std::to_string(yes.size()) + " extendable and " + std::to_string(no.size()) + " non-extendable"};
}

using Mutation = std::function<bool(BoundaryPathSet&, const PlaneGraph&)>;

// Applies m to the first strip where it makes sense; false if none.
bool mutate_first(BoundaryPathSet& set, const std::function<bool(PathPair&, const Strip&, const BoundedSets&, int)>& m) {
  AxisPathSet& a = set.vertical;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (m(a.pairs[i], a.strips[i], a.bounded, static_cast<int>(i))) return true;
  return false;
}

Verdict path_set_soundness() {
  // Four edit classes, each of which breaks a condition every boundary path set meets.
  std::vector<std::pair<std::string, Mutation>> classes = {
      {"swap sides",
       [](BoundaryPathSet& s, const PlaneGraph&) {
         return mutate_first(s, [](PathPair& pp, const Strip&, const BoundedSets&, int) {
           if (pp.left == pp.right) return false;
           std::swap(pp.left, pp.right);
           return true;
         });
       }},
      {"drop bounded vertex",
       [](BoundaryPathSet& s, const PlaneGraph&) {
         return mutate_first(s, [](PathPair& pp, const Strip&, const BoundedSets& b, int i) {
           for (VertexId x : b.left[i]) {
             auto it = std::find(pp.left.begin(), pp.left.end(), x);
             if (it == pp.left.end() || it == pp.left.begin() || it + 1 == pp.left.end()) continue;
             pp.left.erase(it);
             return true;
           }
           return false;
         });
       }},
      {"repeat vertex",
       [](BoundaryPathSet& s, const PlaneGraph&) {
         return mutate_first(s, [](PathPair& pp, const Strip&, const BoundedSets&, int) {
           if (pp.right.size() < 3) return false;
           pp.right.insert(pp.right.begin() + 2, pp.right[1]);
           return true;
         });
       }},
      {"wrong end",
       [](BoundaryPathSet& s, const PlaneGraph& g) {
         return mutate_first(s, [&g](PathPair& pp, const Strip&, const BoundedSets&, int) {
           pp.left.back() = (pp.left.back() + 1) % g.vertex_count();
           return true;
         });
       }},
  };
  int valid = 0, emitted = 0;
  std::map<std::string, int> applied, rejected;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    bool enough = true;
    for (const auto& [name, m] : classes) enough = enough && applied[name] >= 50;
    if (enough && emitted >= 200) break;
    Instance in = seed < corpus().size() ? corpus()[seed].in
                                         : sample_instance(20 + static_cast<int>(seed % 60), 3 + static_cast<int>(seed % 6),
                                                           40000 + seed);
    auto ps = compute_boundary_path_set(in.graph, in.rel, in.partial);
    if (!feasible(ps)) continue;
    const auto& set = std::get<BoundaryPathSet>(ps);
    ++emitted;
    if (check_boundary_path_set(in.graph, in.rel, set).ok()) ++valid;
    for (const auto& [name, m] : classes) {
      if (applied[name] >= 50) continue;
      BoundaryPathSet bad = set;
      if (!m(bad, in.graph)) continue;
      ++applied[name];
      if (!check_boundary_path_set(in.graph, in.rel, bad).ok()) ++rejected[name];
    }
  }
  bool pass = valid == emitted && emitted > 0;
  std::string detail = std::to_string(valid) + "/" + std::to_string(emitted) + " emitted sets valid; rejected";
  for (const auto& [name, m] : classes) {
    pass = pass && applied[name] >= 50 && rejected[name] == applied[name];
    detail += " " + name + " " + std::to_string(rejected[name]) + "/" + std::to_string(applied[name]) + ",";
  }
  detail.pop_back();
  return {pass, detail};
}

Verdict size_separation() {
  std::vector<double> ln, lp;
  double c = 0;
  std::string sizes;
  for (int h : {4, 8, 16, 32, 64}) {
    Instance in = stacked_bars_instance(h, h);
    auto ps = compute_boundary_path_set(in.graph, in.rel, in.partial);
    auto bg = compute_boundary_graphs(in.graph, in.rel, in.partial);
    if (!feasible(ps) || !feasible(bg)) return {false, "family instance with h = " + std::to_string(h) + " rejected"};
    const double n = in.graph.vertex_count();
    const double paths = static_cast<double>(std::get<BoundaryPathSet>(ps).size());
    c = std::max(c, static_cast<double>(std::get<BoundaryGraphs>(bg).size()) / n);
    ln.push_back(std::log(n));
    lp.push_back(std::log(paths));
    sizes += (sizes.empty() ? "" : ", ") + std::to_string(static_cast<int>(n)) + ":" +
             std::to_string(static_cast<long>(paths));
  }
  // Least-squares slope of log size against log n.
  const double k = static_cast<double>(ln.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ln.size(); ++i) sx += ln[i], sy += lp[i], sxx += ln[i] * ln[i], sxy += ln[i] * lp[i];
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return {slope >= 1.5 && c <= 3, "path-set exponent " + fmt(slope) + " (n:size " + sizes +
                                       "), boundary graphs <= " + fmt(c) + " n"};
}

double cpu_seconds() {
  timespec t;
  clock_gettime(CLOCK_PROCESS_CPUTIME_ID, &t);
  return static_cast<double>(t.tv_sec) + 1e-9 * static_cast<double>(t.tv_nsec);
}

Verdict linear_scaling() {
  // Best of five CPU times per instance, each after evicting the caches, summed over three seeds.
  std::vector<unsigned char> junk(512u << 20, 1);
  unsigned char tick = 0;
  auto evict = [&] {
    for (std::size_t i = 0; i < junk.size(); i += 64) junk[i] = static_cast<unsigned char>(junk[i] + ++tick);
  };
  double t[2] = {0, 0};
  bool all_feasible = true;
  for (int k = 0; k < 2; ++k) {
    const int n = k == 0 ? 10000 : 100000;
    for (std::uint64_t seed : {1, 2, 3}) {
      Instance in = sample_instance(n, 8, seed);
      double best = 1e9;
      for (int rep = 0; rep < 5; ++rep) {
        evict();
        const double a = cpu_seconds();
        auto r = decide_and_extend(in.graph, in.rel, in.partial, false);
        best = std::min(best, cpu_seconds() - a);
        all_feasible = all_feasible && feasible(r);
      }
      t[k] += best;
    }
  }
  const double ratio = t[1] / t[0];
  return {all_feasible && ratio <= 15, "T(100000)/T(10000) = " + fmt(ratio) + " (" + fmt(t[0] / 3, 4) + " s vs " +
                                           fmt(t[1] / 3, 4) + " s per instance)"};
}

Verdict simultaneous_pairs() {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SimultaneousPair p = simultaneous_pair(12 + static_cast<int>(seed) * 2, 1 + static_cast<int>(seed % 3), 700 + seed);
    auto r = simultaneous(p.instances, p.shared);
    if (!feasible(r)) continue;
    const auto& duals = std::get<std::vector<Dual>>(r);
    bool good = true;
    for (const auto& [a, b] : p.shared) {
      const Rect& x = duals[a.graph][a.vertex];
      const Rect& y = duals[b.graph][b.vertex];
      for (auto [u, v] : {std::pair{x.x1, y.x1}, {x.x2, y.x2}, {x.y1, y.y1}, {x.y2, y.y2}})
        good = good && u.num() == v.num() && u.den() == v.den();
    }
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& in = p.instances[i];
      good = good && check_contact_rep(in.graph, duals[i]).ok() && extract_rel_from_dual(in.graph, duals[i]) == in.rel;
    }
    if (good) ++ok;
  }
  SimultaneousPair bad = simultaneous_pair(14, 2, 77, true);
  auto r = simultaneous(bad.instances, bad.shared);
  bool witness = false;
  if (!feasible(r)) {
    // The witness telescopes to 0 <= total, so a negative total is a contradiction.
    const auto& w = std::get<Infeasible>(r).witness;
    std::map<int, int> coef;
    Rational total(0);
    for (const DiffConstraint& c : w) ++coef[c.a], --coef[c.b], total += c.c;
    witness = !w.empty() && total < Rational(0);
    for (const auto& [v, k] : coef) witness = witness && k == 0;
  }
  return {ok == 20 && witness, std::to_string(ok) + "/20 pairs with identical shared rectangles; contradictory pair " +
                                   (witness ? "refuted by a negative cycle" : "NOT refuted")};
}

Verdict sdc_suite() {
  bool pair_ok = false;
  {
    Sdc s;
    int x = s.add_variable("x"), y = s.add_variable("y");
    s.add(x, y, Rational(-1));
    s.add(y, x, Rational(0));
    auto r = solve(s);
    if (!feasible(r)) {
      auto total = witness_total(std::get<Infeasible>(r).witness);
      pair_ok = total && *total < Rational(0);
    }
  }
  std::mt19937_64 rng(424242);
  int agree = 0, exact = 0, solved = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Sdc s;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) s.add_variable("v" + std::to_string(i));
    int m = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < m; ++j) {
      int a = static_cast<int>(rng() % (k + 1)), b = static_cast<int>(rng() % (k + 1));
      s.add(a, b, Rational(static_cast<std::int64_t>(rng() % 7) - 3));
    }
    auto r = solve(s);
    if (feasible(r) == oracle::brute_force_feasible(s, 3 * k)) ++agree;
    if (feasible(r)) {
      ++solved;
      if (satisfies(s, std::get<SdcSolution>(r))) ++exact;
    } else {
      auto total = witness_total(std::get<Infeasible>(r).witness);
      if (total && *total < Rational(0)) ++exact, ++solved;
    }
  }
  return {pair_ok && agree == 1000 && exact == solved,
          std::string("contradictory pair ") + (pair_ok ? "refuted" : "NOT refuted") + "; " + std::to_string(agree) +
              "/1000 fuzzed systems match exhaustive search, " + std::to_string(exact) + "/" + std::to_string(solved) +
              " answers check exactly"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"labeling round trip", rel_round_trip},
      {"integer size bound", integer_size_bound},
      {"three methods agree", three_way_agreement},
      {"extensions are valid", extension_validity},
      {"order-preserving moves keep the verdict", order_invariance},
      {"boundary path sets are sound", path_set_soundness},
      {"path sets outgrow boundary graphs", size_separation},
      {"linear-time scaling", linear_scaling},
      {"simultaneous representations", simultaneous_pairs},
      {"difference constraints", sdc_suite},
  };
  // Optional argument: run only criteria whose number is listed, e.g. "3,8".
  std::string only = argc > 1 ? argv[1] : "";
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const std::string id = std::to_string(i + 1);
    if (!only.empty() && ("," + only + ",").find("," + id + ",") == std::string::npos) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2s %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", id.c_str(), criteria[i].first.c_str(),
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
