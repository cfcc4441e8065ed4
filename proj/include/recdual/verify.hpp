#pragma once

/// \file verify.hpp
/// Geometric ground truth: is a set of rectangles a rectangular dual of g,
/// does it realize a labeling, is a partial dual consistent.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/plane_graph.hpp"
#include "recdual/rel.hpp"

namespace recdual {

enum class ViolationKind { kDegenerate, kOverlap, kMissingContact, kExtraContact, kFourCorner, kUnionNotRectangle, kPointContact };

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::kDegenerate: return "degenerate";
    case ViolationKind::kOverlap: return "overlap";
    case ViolationKind::kMissingContact: return "missing-contact";
    case ViolationKind::kExtraContact: return "extra-contact";
    case ViolationKind::kFourCorner: return "four-corner";
    case ViolationKind::kUnionNotRectangle: return "union-not-rectangle";
    case ViolationKind::kPointContact: return "point-contact";
  }
  return "?";
}

struct ContactViolation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::string where;

  std::string str() const {
    std::string s = violation_name(kind);
    for (VertexId v : vertices) s += " " + std::to_string(v);
    if (!where.empty()) s += " at " + where;
    return s;
  }
};

struct ContactReport {
  std::vector<ContactViolation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const auto& v) { return v.kind == k; });
  }
};

namespace detail {

/// Pairs (a, b) with a's side at coordinate X touching b's opposite side
/// along a positive-length segment. `lo`/`hi` pick the side; `a1`/`a2` the
/// extent along the side.
template <class SideA, class SideB, class Lo, class Hi>
void side_contacts(const std::vector<Rect>& rects, const std::vector<VertexId>& ids, SideA side_a, SideB side_b, Lo lo,
                   Hi hi, std::vector<std::pair<VertexId, VertexId>>& out) {
  std::vector<std::tuple<Rational, Rational, VertexId>> as, bs;
  for (VertexId v : ids) {
    as.emplace_back(side_a(rects[v]), lo(rects[v]), v);
    bs.emplace_back(side_b(rects[v]), lo(rects[v]), v);
  }
  std::sort(as.begin(), as.end());
  std::sort(bs.begin(), bs.end());
  std::size_t i = 0, j = 0;
  while (i < as.size() && j < bs.size()) {
    const Rational& xa = std::get<0>(as[i]);
    const Rational& xb = std::get<0>(bs[j]);
    if (xa < xb) { ++i; continue; }
    if (xb < xa) { ++j; continue; }
    std::size_t ie = i, je = j;
    while (ie < as.size() && std::get<0>(as[ie]) == xa) ++ie;
    while (je < bs.size() && std::get<0>(bs[je]) == xa) ++je;
    // Both runs sorted by their low end; sweep.
    std::size_t p = i, q = j;
    while (p < ie && q < je) {
      VertexId a = std::get<2>(as[p]), b = std::get<2>(bs[q]);
      if (overlap_length(lo(rects[a]), hi(rects[a]), lo(rects[b]), hi(rects[b])) > Rational(0)) out.emplace_back(a, b);
      if (hi(rects[a]) < hi(rects[b])) ++p; else ++q;
    }
    i = ie;
    j = je;
  }
}

}  // namespace detail

/// All positive-length contacts as (left, right) and (below, above) pairs.
inline std::vector<std::pair<VertexId, VertexId>> positive_contacts(const std::vector<Rect>& rects,
                                                                    const std::vector<VertexId>& ids) {
  std::vector<std::pair<VertexId, VertexId>> out;
  detail::side_contacts(rects, ids, [](const Rect& r) { return r.x2; }, [](const Rect& r) { return r.x1; },
                        [](const Rect& r) { return r.y1; }, [](const Rect& r) { return r.y2; }, out);
  detail::side_contacts(rects, ids, [](const Rect& r) { return r.y2; }, [](const Rect& r) { return r.y1; },
                        [](const Rect& r) { return r.x1; }, [](const Rect& r) { return r.x2; }, out);
  return out;
}

/// Pairs of rectangles among `ids` with overlapping interiors (a sweep that
/// reports overlaps against the current disjoint active set).
inline std::vector<std::pair<VertexId, VertexId>> overlapping_pairs(const std::vector<Rect>& rects,
                                                                    const std::vector<VertexId>& ids) {
  std::vector<std::tuple<Rational, int, VertexId>> events;  // removals (0) before insertions (1)
  for (VertexId v : ids) {
    events.emplace_back(rects[v].x1, 1, v);
    events.emplace_back(rects[v].x2, 0, v);
  }
  std::sort(events.begin(), events.end());
  std::set<std::pair<Rational, VertexId>> active;
  std::vector<char> inserted(rects.size(), 0);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [x, type, v] : events) {
    const Rect& r = rects[v];
    if (type == 0) {
      if (inserted[v]) active.erase({r.y1, v});
      continue;
    }
    auto it = active.lower_bound({r.y1, -1});
    bool clash = false;
    if (it != active.end() && it->first < r.y2) {
      out.emplace_back(it->second, v);
      clash = true;
    }
    if (it != active.begin()) {
      auto p = std::prev(it);
      if (rects[p->second].y2 > r.y1) {
        out.emplace_back(p->second, v);
        clash = true;
      }
    }
    if (!clash) {
      active.emplace(r.y1, v);
      inserted[v] = 1;
    }
  }
  return out;
}

/// Points that are a corner of four or more rectangles among `ids`.
inline std::vector<std::pair<Rational, Rational>> four_corner_points(const std::vector<Rect>& rects,
                                                                     const std::vector<VertexId>& ids) {
  std::vector<std::pair<Rational, Rational>> corners;
  for (VertexId v : ids) {
    const Rect& r = rects[v];
    corners.insert(corners.end(), {{r.x1, r.y1}, {r.x1, r.y2}, {r.x2, r.y1}, {r.x2, r.y2}});
  }
  std::sort(corners.begin(), corners.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < corners.size();) {
    std::size_t j = i;
    while (j < corners.size() && corners[j] == corners[i]) ++j;
    if (j - i >= 4) out.push_back(corners[i]);
    i = j;
  }
  return out;
}

namespace detail {

inline bool corner_touch(const Rect& a, const Rect& b) {
  bool xs = a.x2 == b.x1 || b.x2 == a.x1;
  bool ys = a.y2 == b.y1 || b.y2 == a.y1;
  return xs && ys;
}

inline std::string point_str(const std::pair<Rational, Rational>& p) {
  return "(" + p.first.str() + "," + p.second.str() + ")";
}

}  // namespace detail

/// Full check that `dual` is a rectangular dual of g: nondegenerate,
/// interior-disjoint, contacts exactly the edges, no four rectangles at a
/// point, union a rectangle.
inline ContactReport check_contact_rep(const PlaneGraph& g, const Dual& dual) {
  ContactReport rep;
  const int n = g.vertex_count();
  if (static_cast<int>(dual.rects.size()) != n) {
    rep.violations.push_back({ViolationKind::kMissingContact, {}, "rectangle count differs from vertex count"});
    return rep;
  }
  std::vector<VertexId> ids(n);
  for (VertexId v = 0; v < n; ++v) {
    ids[v] = v;
    if (!dual[v].nondegenerate()) rep.violations.push_back({ViolationKind::kDegenerate, {v}, dual[v].str()});
  }
  if (!rep.ok()) return rep;
  for (auto [a, b] : overlapping_pairs(dual.rects, ids)) rep.violations.push_back({ViolationKind::kOverlap, {a, b}, ""});
  std::set<std::pair<VertexId, VertexId>> touching;
  for (auto [a, b] : positive_contacts(dual.rects, ids)) {
    touching.insert({std::min(a, b), std::max(a, b)});
    if (!g.adjacent(a, b)) rep.violations.push_back({ViolationKind::kExtraContact, {a, b}, ""});
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v < u || touching.count({u, v})) continue;
      bool corner = detail::corner_touch(dual[u], dual[v]);
      rep.violations.push_back({corner ? ViolationKind::kPointContact : ViolationKind::kMissingContact, {u, v}, ""});
    }
  }
  for (const auto& p : four_corner_points(dual.rects, ids))
    rep.violations.push_back({ViolationKind::kFourCorner, {}, detail::point_str(p)});
  Rect box = dual.bounding_box();
  Rational total(0);
  for (const Rect& r : dual.rects) total += r.area();
  if (total != box.area())
    rep.violations.push_back({ViolationKind::kUnionNotRectangle, {}, "area " + total.str() + " vs " + box.area().str()});
  return rep;
}

/// Contact kind required between u and v by the labeling, outer edges
/// included; kNone if u and v are not adjacent.
class RelDirections {
 public:
  RelDirections(const PlaneGraph& g, const Rel& rel) : g_(&g), kind_(detail::half_edge_kinds(g, rel, nullptr)) {}

  ContactKind required(VertexId u, VertexId v) const {
    if (!g_->adjacent(u, v)) return ContactKind::kNone;
    switch (kind_[g_->half_edge(u, v)]) {
      case kRedOut: return ContactKind::kLeftOf;
      case kRedIn: return ContactKind::kRightOf;
      case kBlueOut: return ContactKind::kBelow;
      case kBlueIn: return ContactKind::kAbove;
      default: return ContactKind::kNone;
    }
  }

 private:
  const PlaneGraph* g_;
  std::vector<EdgeKind> kind_;
};

/// check_contact_rep plus: every contact has the side and direction the
/// labeling prescribes.
inline ValidationReport check_realizes(const PlaneGraph& g, const Rel& rel, const Dual& dual) {
  ValidationReport rep;
  ContactReport c = check_contact_rep(g, dual);
  for (const auto& v : c.violations) rep.add(v.str());
  if (!rep.ok()) return rep;
  RelDirections dir(g, rel);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (contact(dual[u], dual[v]) != dir.required(u, v))
        rep.add("contact " + std::to_string(u) + "-" + std::to_string(v) + " contradicts the labeling");
    }
  }
  return rep;
}

/// Whether `p` is a valid partial dual of g compatible with rel: vertex ids
/// exist, rectangles nondegenerate and interior-disjoint, fixed-fixed
/// contacts exactly the edges of G[U] with the labeled side and direction.
inline ValidationReport check_partial(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  ValidationReport rep;
  const int n = g.vertex_count();
  std::vector<Rect> rects(n);
  std::vector<VertexId> ids;
  for (const auto& [v, r] : p.fixed) {
    if (v < 0 || v >= n) {
      rep.add("fixed vertex " + std::to_string(v) + " not in graph");
      continue;
    }
    if (!r.nondegenerate()) rep.add("fixed rectangle of " + std::to_string(v) + " is degenerate");
    rects[v] = r;
    ids.push_back(v);
  }
  if (!rep.ok()) return rep;
  for (auto [a, b] : overlapping_pairs(rects, ids))
    rep.add("fixed rectangles " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
  for (const auto& pt : four_corner_points(rects, ids)) rep.add("four fixed rectangles meet at " + detail::point_str(pt));
  // Labels of the few fixed-fixed contacts, looked up in the sorted labeling.
  std::optional<RelDirections> dir;
  const bool sorted = std::is_sorted(rel.edges.begin(), rel.edges.end());
  auto required = [&](VertexId a, VertexId b) {
    if (!sorted) {
      if (!dir) dir.emplace(g, rel);
      return dir->required(a, b);
    }
    for (bool fwd : {true, false}) {
      VertexId x = fwd ? a : b, y = fwd ? b : a;
      std::optional<Layer> layer;
      for (const LabeledEdge& e : detail::outer_edge_labels(g.outer()))
        if (e.from == x && e.to == y) layer = e.layer;
      auto it = std::lower_bound(rel.edges.begin(), rel.edges.end(), LabeledEdge{x, y, Layer::kVertical});
      if (!layer && it != rel.edges.end() && it->from == x && it->to == y) layer = it->layer;
      if (!layer) continue;
      if (*layer == Layer::kVertical) return fwd ? ContactKind::kBelow : ContactKind::kAbove;
      return fwd ? ContactKind::kLeftOf : ContactKind::kRightOf;
    }
    return ContactKind::kNone;
  };
  std::set<std::pair<VertexId, VertexId>> touching;
  for (auto [a, b] : positive_contacts(rects, ids)) {
    touching.insert({std::min(a, b), std::max(a, b)});
    if (!g.adjacent(a, b))
      rep.add("fixed rectangles " + std::to_string(a) + " and " + std::to_string(b) + " touch but are not adjacent");
    else if (contact(rects[a], rects[b]) != required(a, b))
      rep.add("contact " + std::to_string(a) + "-" + std::to_string(b) + " contradicts the labeling");
  }
  for (VertexId u : ids) {
    for (VertexId v : g.neighbors(u)) {
      if (v < u || !p.contains(v) || touching.count({u, v})) continue;
      rep.add("fixed rectangles " + std::to_string(u) + " and " + std::to_string(v) + " are adjacent but do not touch");
    }
  }
  return rep;
}

/// Whether `dual` agrees with `p` exactly on every fixed vertex.
inline bool extends(const Dual& dual, const PartialDual& p) {
  for (const auto& [v, r] : p.fixed)
    if (v < 0 || v >= static_cast<int>(dual.rects.size()) || !(dual[v] == r)) return false;
  return true;
}

/// Moves every fixed coordinate to a fresh random value while keeping the
/// sorted order (and all equalities) of the x-values and of the y-values.
inline PartialDual order_perturb(const PartialDual& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto remap = [&](std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::map<Rational, Rational> m;
    Rational at(static_cast<std::int64_t>(rng() % 11) - 5);
    for (const Rational& v : values) {
      m[v] = at;
      at += Rational(1 + static_cast<std::int64_t>(rng() % 12), 1 + static_cast<std::int64_t>(rng() % 4));
    }
    return m;
  };
  std::vector<Rational> xs, ys;
  for (const auto& [v, r] : p.fixed) {
    xs.insert(xs.end(), {r.x1, r.x2});
    ys.insert(ys.end(), {r.y1, r.y2});
  }
  auto mx = remap(xs), my = remap(ys);
  PartialDual out;
  for (const auto& [v, r] : p.fixed) out.fixed[v] = Rect{mx[r.x1], mx[r.x2], my[r.y1], my[r.y2]};
  return out;
}

}  // namespace recdual
