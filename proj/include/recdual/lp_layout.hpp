#pragma once

/// \file lp_layout.hpp
/// Rectangular duals as solutions of difference-constraint systems: plain
/// construction, extension of a partial dual, and several graphs sharing
/// rectangles.

#include <string>
#include <utility>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/frame.hpp"
#include "recdual/geometry.hpp"
#include "recdual/outcome.hpp"
#include "recdual/rel.hpp"
#include "recdual/sdc.hpp"
#include "recdual/verify.hpp"

namespace recdual {

/// Variable ids of the four sides of each rectangle, for a system whose
/// variables were declared by add_rect_variables starting at `base`.
struct RectVars {
  int base = 1;

  int x1(VertexId v) const { return base + 4 * v; }
  int x2(VertexId v) const { return base + 4 * v + 1; }
  int y1(VertexId v) const { return base + 4 * v + 2; }
  int y2(VertexId v) const { return base + 4 * v + 3; }
};

inline RectVars add_rect_variables(Sdc& s, int n, const std::string& prefix = "") {
  RectVars vars{s.variable_count()};
  for (VertexId v = 0; v < n; ++v) {
    for (const char* side : {"x1_", "x2_", "y1_", "y2_"}) s.add_variable(prefix + side + std::to_string(v));
  }
  return vars;
}

namespace detail {

/// One axis: sides glued along `touch` edges, first and last neighbors
/// along `overlap` edges overlapping by eps.
template <class Lo, class Hi>
void add_axis(Sdc& s, int n, const StDigraph& touch, const StDigraph& overlap, Lo lo, Hi hi, const Rational& eps) {
  for (VertexId u = 0; u < n; ++u) {
    s.add_at_least(hi(u), lo(u), eps);
    for (VertexId v : touch.out[u]) s.add_equal(hi(u), lo(v), 0);
    if (!overlap.out[u].empty()) {
      s.add_at_least(hi(overlap.out[u].front()), lo(u), eps);
      s.add_at_least(hi(u), lo(overlap.out[u].back()), eps);
    }
    if (!overlap.in[u].empty()) {
      s.add_at_least(hi(overlap.in[u].back()), lo(u), eps);
      s.add_at_least(hi(u), lo(overlap.in[u].front()), eps);
    }
  }
}

}  // namespace detail

/// Adds the constraints of a dual of (g, rel) with every width, height and
/// forced overlap at least eps, over variables `vars`.
inline void add_recdual(Sdc& s, const RectVars& vars, const PlaneGraph& g, const Rel& rel, const Rational& eps) {
  const int n = g.vertex_count();
  const OuterQuad& o = g.outer();
  LayerGraphs lg = layer_graphs(g, rel);
  auto x1 = [&](VertexId v) { return vars.x1(v); };
  auto x2 = [&](VertexId v) { return vars.x2(v); };
  auto y1 = [&](VertexId v) { return vars.y1(v); };
  auto y2 = [&](VertexId v) { return vars.y2(v); };
  detail::add_axis(s, n, lg.horizontal, lg.vertical, x1, x2, eps);
  detail::add_axis(s, n, lg.vertical, lg.horizontal, y1, y2, eps);
  // The outer border is straight.
  s.add_equal(vars.x1(o.west), vars.x1(o.south), 0);
  s.add_equal(vars.x2(o.east), vars.x2(o.north), 0);
  s.add_equal(vars.y1(o.south), vars.y1(o.east), 0);
  s.add_equal(vars.y2(o.west), vars.y2(o.north), 0);
}

/// The system for a dual of (g, rel) with all sizes and overlaps >= eps.
inline Sdc build_recdual(const PlaneGraph& g, const Rel& rel, const Rational& eps) {
  if (eps <= Rational(0)) throw InvalidInput("eps must be positive");
  Sdc s;
  RectVars vars = add_rect_variables(s, g.vertex_count());
  add_recdual(s, vars, g, rel, eps);
  return s;
}

inline Dual dual_from_solution(int n, const SdcSolution& sol, const RectVars& vars = {}) {
  Dual d;
  d.rects.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    Rect r{sol[vars.x1(v)], sol[vars.x2(v)], sol[vars.y1(v)], sol[vars.y2(v)]};
    if (!r.nondegenerate()) throw InternalError("degenerate rectangle for vertex " + std::to_string(v));
    d.rects.push_back(r);
  }
  return d;
}

inline Dual dual_from_solution(const PlaneGraph& g, const SdcSolution& sol) {
  return dual_from_solution(g.vertex_count(), sol);
}

/// Integer dual realizing rel with the lower left corner at the origin. With
/// `minimize`, width and height are each the smallest possible for rel.
inline Dual compute_dual(const PlaneGraph& g, const Rel& rel, bool minimize) {
  const int n = g.vertex_count();
  const OuterQuad& o = g.outer();
  Sdc s = build_recdual(g, rel, 1);
  RectVars vars;
  s.fix(vars.x1(o.west), 0);
  s.fix(vars.y1(o.south), 0);
  SdcSolution sol;
  if (!minimize) {
    auto r = solve(s);
    if (!feasible(r)) throw InternalError("system of a valid labeling is infeasible");
    sol = std::get<SdcSolution>(std::move(r));
  } else {
    auto w = minimize_variable(s, vars.x2(o.north), 0, n);
    auto h = minimize_variable(s, vars.y2(o.north), 0, n);
    if (!feasible(w) || !feasible(h)) throw InternalError("no dual of width and height at most n");
    // The two axes share no constraint, so the halves combine.
    sol = std::get<SdcMinimum>(w).solution;
    const SdcSolution& ys = std::get<SdcMinimum>(h).solution;
    for (VertexId v = 0; v < n; ++v) {
      sol.values[vars.y1(v)] = ys[vars.y1(v)];
      sol.values[vars.y2(v)] = ys[vars.y2(v)];
    }
  }
  return dual_from_solution(n, sol, vars);
}

/// d / n, where d is the smallest gap between distinct fixed x-values or
/// between distinct fixed y-values.
inline Rational epsilon_for(const PartialDual& p, int n) {
  if (p.fixed.empty()) throw InvalidInput("epsilon_for needs a fixed rectangle");
  std::vector<Rational> xs, ys;
  for (const auto& [v, r] : p.fixed) {
    xs.insert(xs.end(), {r.x1, r.x2});
    ys.insert(ys.end(), {r.y1, r.y2});
  }
  std::optional<Rational> d;
  for (auto* vals : {&xs, &ys}) {
    std::sort(vals->begin(), vals->end());
    vals->erase(std::unique(vals->begin(), vals->end()), vals->end());
    for (std::size_t i = 1; i < vals->size(); ++i) {
      Rational gap = (*vals)[i] - (*vals)[i - 1];
      if (!d || gap < *d) d = gap;
    }
  }
  if (!d) throw InvalidInput("fixed rectangles are degenerate");
  return *d / Rational(n);
}

/// Throws InvalidInput unless p is a partial dual of g consistent with rel.
inline void require_consistent(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  ValidationReport rep = check_partial(g, rel, p);
  if (!rep.ok()) throw InvalidInput("inconsistent partial dual: " + rep.violations.front());
}

/// p checked against rel and completed with a frame.
inline Outcome<PartialDual> framed_partial(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  require_consistent(g, rel, p);
  auto framed = ensure_frame(g, p);
  if (feasible(framed)) require_consistent(g, rel, std::get<PartialDual>(framed));
  return framed;
}

/// An extension of p realizing rel, or a negative-cycle certificate.
inline Outcome<Dual> extend_via_lp(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  auto framed = framed_partial(g, rel, p);
  if (!feasible(framed)) return std::get<Infeasible>(framed);
  const PartialDual& q = std::get<PartialDual>(framed);
  Rational eps = epsilon_for(q, g.vertex_count());
  Sdc s = build_recdual(g, rel, eps);
  RectVars vars;
  for (const auto& [v, r] : q.fixed) {
    s.fix(vars.x1(v), r.x1);
    s.fix(vars.x2(v), r.x2);
    s.fix(vars.y1(v), r.y1);
    s.fix(vars.y2(v), r.y2);
  }
  auto r = solve(s);
  if (!feasible(r)) return std::get<Infeasible>(std::move(r));
  return dual_from_solution(g.vertex_count(), std::get<SdcSolution>(r), vars);
}

struct SimultaneousInstance {
  PlaneGraph graph;
  Rel rel;
};

/// Vertex `vertex` of instance `graph`.
struct SharedRef {
  int graph = 0;
  VertexId vertex = kNoVertex;
};

/// One dual per instance such that identified vertices get identical
/// rectangles, or a negative-cycle certificate. The instances' systems
/// (eps = 1) are concatenated and the four side variables of identified
/// vertices equated.
inline Outcome<std::vector<Dual>> simultaneous(const std::vector<SimultaneousInstance>& instances,
                                               const std::vector<std::pair<SharedRef, SharedRef>>& shared) {
  Sdc s;
  std::vector<RectVars> vars;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    vars.push_back(add_rect_variables(s, in.graph.vertex_count(), "g" + std::to_string(i) + "."));
    add_recdual(s, vars.back(), in.graph, in.rel, 1);
  }
  auto check = [&](const SharedRef& r) {
    if (r.graph < 0 || r.graph >= static_cast<int>(instances.size()) || r.vertex < 0 ||
        r.vertex >= instances[r.graph].graph.vertex_count())
      throw InvalidInput("identification references unknown vertex " + std::to_string(r.graph) + ":" +
                         std::to_string(r.vertex));
  };
  for (const auto& [a, b] : shared) {
    check(a);
    check(b);
    const RectVars& va = vars[a.graph];
    const RectVars& vb = vars[b.graph];
    s.add_equal(va.x1(a.vertex), vb.x1(b.vertex), 0);
    s.add_equal(va.x2(a.vertex), vb.x2(b.vertex), 0);
    s.add_equal(va.y1(a.vertex), vb.y1(b.vertex), 0);
    s.add_equal(va.y2(a.vertex), vb.y2(b.vertex), 0);
  }
  auto r = solve(s);
  if (!feasible(r)) return std::get<Infeasible>(std::move(r));
  std::vector<Dual> out;
  for (std::size_t i = 0; i < instances.size(); ++i)
    out.push_back(dual_from_solution(instances[i].graph.vertex_count(), std::get<SdcSolution>(r), vars[i]));
  return out;
}

}  // namespace recdual
