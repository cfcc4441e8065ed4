#pragma once

/// \file generators.hpp
/// Random instances: a PTP graph with its labeling and a partial dual.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <tuple>
#include <vector>

#include "recdual/dual_from_rel.hpp"
#include "recdual/geometry.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/plane_graph.hpp"
#include "recdual/rel.hpp"
#include "recdual/verify.hpp"

namespace recdual {

struct Instance {
  PlaneGraph graph;
  Rel rel;
  PartialDual partial;
  Dual source;  // dual the fixed rectangles were taken from (before moving)
};

namespace detail {

/// Spreads the distinct values of each axis of d to random increasing
/// integers with gaps in [1, spread].
inline Dual spread_dual(const Dual& d, int spread, std::mt19937_64& rng) {
  std::map<Rational, Rational> mx, my;
  for (const Rect& r : d.rects) {
    for (const Rational* x : {&r.x1, &r.x2}) mx[*x] = Rational(0);
    for (const Rational* y : {&r.y1, &r.y2}) my[*y] = Rational(0);
  }
  std::uniform_int_distribution<int> gap(1, spread);
  for (auto* m : {&mx, &my}) {
    std::int64_t at = 0;
    for (auto& [k, val] : *m) val = Rational(at += gap(rng));
  }
  Dual out = d;
  for (Rect& r : out.rects) r = Rect{mx[r.x1], mx[r.x2], my[r.y1], my[r.y2]};
  return out;
}

}  // namespace detail

/// Partial dual taken from a dual of a random graph: h random inner
/// rectangles, plus the frame when `frame`. Always extendable.
inline Instance sample_instance(int n, int h, std::uint64_t seed, bool frame = true, int spread = 3) {
  std::mt19937_64 rng(seed);
  PlaneGraph g = generate_ptp(n, rng());
  Rel rel = compute_rel(g);
  Dual d = detail::spread_dual(dual_from_rel(g, rel), spread, rng);
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < n; ++v)
    if (!g.is_outer(v)) inner.push_back(v);
  std::shuffle(inner.begin(), inner.end(), rng);
  inner.resize(std::min<std::size_t>(inner.size(), static_cast<std::size_t>(std::max(h, 0))));
  Instance in{g, rel, {}, d};
  for (VertexId v : inner) in.partial.fixed[v] = d[v];
  if (frame)
    for (VertexId v : g.outer().as_array()) in.partial.fixed[v] = d[v];
  return in;
}

/// A sampled instance (with frame) where some fixed rectangles that touch no
/// other fixed rectangle are moved to random free spots. The result is a
/// consistent partial dual that may or may not be extendable.
inline Instance adversarial_instance(int n, int h, std::uint64_t seed, int moves = 1) {
  Instance in = sample_instance(n, h, seed, true, 4);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const OuterQuad& o = in.graph.outer();
  Rect box{in.partial.at(o.west).x2, in.partial.at(o.east).x1, in.partial.at(o.south).y2, in.partial.at(o.north).y1};
  auto touches_any = [&](VertexId v, const Rect& r) {
    for (const auto& [w, s] : in.partial.fixed) {
      if (w == v) continue;
      bool apart = r.x2 < s.x1 || s.x2 < r.x1 || r.y2 < s.y1 || s.y2 < r.y1;
      if (!apart) return true;
    }
    return false;
  };
  std::vector<VertexId> loose;
  for (const auto& [v, r] : in.partial.fixed) {
    if (in.graph.is_outer(v)) continue;
    bool alone = true;
    for (const auto& [w, s] : in.partial.fixed) alone = alone && (w == v || !in.graph.adjacent(v, w));
    if (alone) loose.push_back(v);
  }
  std::shuffle(loose.begin(), loose.end(), rng);
  auto coord = [&](const Rational& lo, const Rational& hi) {
    std::uniform_int_distribution<std::int64_t> d(lo.num(), hi.num());
    return Rational(d(rng));
  };
  for (int m = 0; m < moves && m < static_cast<int>(loose.size()); ++m) {
    VertexId v = loose[m];
    for (int attempt = 0; attempt < 50; ++attempt) {
      Rational x1 = coord(box.x1 + Rational(1), box.x2 - Rational(2));
      Rational y1 = coord(box.y1 + Rational(1), box.y2 - Rational(2));
      Rational x2 = coord(x1 + Rational(1), box.x2 - Rational(1));
      Rational y2 = coord(y1 + Rational(1), box.y2 - Rational(1));
      Rect r{x1, x2, y1, y2};
      if (!touches_any(v, r)) {
        in.partial.fixed[v] = r;
        break;
      }
    }
  }
  // Shift single sides of fixed rectangles while the partial dual stays
  // consistent with the labeling.
  std::vector<VertexId> inner;
  for (const auto& [v, r] : in.partial.fixed)
    if (!in.graph.is_outer(v)) inner.push_back(v);
  std::uniform_int_distribution<int> delta(-3, 3), pick_side(0, 3);
  for (int m = 0; m < moves && !inner.empty(); ++m) {
    VertexId v = inner[rng() % inner.size()];
    PartialDual q = in.partial;
    Rect& r = q.fixed[v];
    Rational* side[4] = {&r.x1, &r.x2, &r.y1, &r.y2};
    *side[pick_side(rng)] += Rational(delta(rng));
    if (r.nondegenerate() && r.x1 >= box.x1 && r.x2 <= box.x2 && r.y1 >= box.y1 && r.y2 <= box.y2 &&
        check_partial(in.graph, in.rel, q).ok())
      in.partial = q;
  }
  return in;
}

/// The contact graph of a dual with no four rectangles meeting at a point.
/// Each rotation runs ccw around the rectangle starting at its bottom side.
/// Quadratic in the number of rectangles.
inline PlaneGraph graph_from_dual(const Dual& d, OuterQuad outer = {}) {
  const int n = static_cast<int>(d.rects.size());
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 0; v < n; ++v) {
    const Rect& r = d[v];
    // (side, key, w): sides in ccw order, key increasing along the walk.
    std::vector<std::tuple<int, Rational, VertexId>> around;
    for (VertexId w = 0; w < n; ++w) {
      if (w == v) continue;
      const Rect& s = d[w];
      switch (contact(r, s)) {
        case ContactKind::kAbove: around.emplace_back(0, s.x1 > r.x1 ? s.x1 : r.x1, w); break;
        case ContactKind::kLeftOf: around.emplace_back(1, s.y1 > r.y1 ? s.y1 : r.y1, w); break;
        case ContactKind::kBelow: around.emplace_back(2, -(s.x1 > r.x1 ? s.x1 : r.x1), w); break;
        case ContactKind::kRightOf: around.emplace_back(3, -(s.y1 > r.y1 ? s.y1 : r.y1), w); break;
        case ContactKind::kNone: break;
      }
    }
    std::sort(around.begin(), around.end());
    for (const auto& t : around) rot[v].push_back(std::get<2>(t));
  }
  return PlaneGraph(rot, outer);
}

/// A frame with h fixed unit squares in a row along the bottom and k free
/// bars stacked above them, each spanning the full width. Every boundary
/// path of the vertical strips climbs through all the bars.
inline Instance stacked_bars_instance(int h, int k) {
  if (h < 1 || k < 1) throw InvalidInput("stacked_bars_instance needs h >= 1 and k >= 1");
  const std::int64_t X = h + 2, Y = k + 3;
  auto R = [](std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) {
    return Rect{Rational(x1), Rational(x2), Rational(y1), Rational(y2)};
  };
  Dual d;
  d.rects = {R(1, X, Y - 1, Y), R(X - 1, X, 0, Y - 1), R(0, X - 1, 0, 1), R(0, 1, 1, Y)};
  for (int i = 0; i < h; ++i) d.rects.push_back(R(1 + i, 2 + i, 1, 2));
  for (int j = 0; j < k; ++j) d.rects.push_back(R(1, X - 1, 2 + j, 3 + j));
  PlaneGraph g = graph_from_dual(d);
  Rel rel = extract_rel_from_dual(g, d);
  Instance in{g, rel, {}, d};
  for (VertexId v = 0; v < 4 + h; ++v) in.partial.fixed[v] = d[v];
  return in;
}

struct SimultaneousPair {
  std::vector<SimultaneousInstance> instances;
  std::vector<std::pair<SharedRef, SharedRef>> shared;
  std::vector<Dual> drawings;  // one dual per instance, agreeing on shared vertices when feasible
};

/// Two graphs that share `shared` inner vertices (1 to 3). The second
/// comes from a dual of the first with some other inner rectangles cut in
/// two, so the pair always has a simultaneous representation. With
/// `contradictory` the second drawing is the first turned by 180 degrees
/// and two horizontally adjacent vertices are shared, so none exists.
inline SimultaneousPair simultaneous_pair(int n, int shared, std::uint64_t seed, bool contradictory = false) {
  std::mt19937_64 rng(seed);
  PlaneGraph g = generate_ptp(n, rng());
  Rel rel = compute_rel(g);
  Dual d = detail::spread_dual(dual_from_rel(g, rel), 3, rng);
  SimultaneousPair out;
  out.instances.push_back({g, rel});
  out.drawings.push_back(d);
  if (contradictory) {
    const Rect box = d.bounding_box();
    Dual t = d;
    for (Rect& r : t.rects) r = Rect{box.x2 - r.x2, box.x2 - r.x1, box.y2 - r.y2, box.y2 - r.y1};
    const OuterQuad& o = g.outer();
    PlaneGraph h = graph_from_dual(t, OuterQuad{o.south, o.west, o.north, o.east});
    out.instances.push_back({h, extract_rel_from_dual(h, t)});
    out.drawings.push_back(t);
    for (const LabeledEdge& e : rel.edges) {
      if (e.layer != Layer::kHorizontal || g.is_outer(e.from) || g.is_outer(e.to)) continue;
      out.shared = {{{0, e.from}, {1, e.from}}, {{0, e.to}, {1, e.to}}};
      break;
    }
    if (out.shared.empty()) throw InvalidInput("no inner red edge to share");
    return out;
  }
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < n; ++v)
    if (!g.is_outer(v)) inner.push_back(v);
  std::shuffle(inner.begin(), inner.end(), rng);
  const std::size_t k = static_cast<std::size_t>(std::clamp(shared, 1, 3));
  if (inner.size() < k + 1) throw InvalidInput("graph too small for the shared vertices");
  for (std::size_t i = 0; i < k; ++i) out.shared.push_back({{0, inner[i]}, {1, inner[i]}});
  // Cut up to three other rectangles; a cut is kept if the result is
  // still a rectangular dual.
  Dual t = d;
  int cuts = 0;
  for (std::size_t i = k; i < inner.size() && cuts < 3; ++i) {
    const Rect r = t[inner[i]];
    const bool vertical = rng() % 2 == 0;
    Dual u = t;
    if (vertical) {
      const Rational m = r.x1 + (r.x2 - r.x1) / Rational(3);
      u[inner[i]].x2 = m;
      u.rects.push_back(Rect{m, r.x2, r.y1, r.y2});
    } else {
      const Rational m = r.y1 + (r.y2 - r.y1) / Rational(3);
      u[inner[i]].y2 = m;
      u.rects.push_back(Rect{r.x1, r.x2, m, r.y2});
    }
    try {
      PlaneGraph h = graph_from_dual(u, g.outer());
      if (!validate_ptp(h).ok() || !check_contact_rep(h, u).ok()) continue;
    } catch (const InvalidInput&) {
      continue;
    }
    t = u;
    ++cuts;
  }
  PlaneGraph h = graph_from_dual(t, g.outer());
  out.instances.push_back({h, extract_rel_from_dual(h, t)});
  out.drawings.push_back(t);
  return out;
}

}  // namespace recdual
