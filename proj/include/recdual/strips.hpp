#pragma once

/// \file strips.hpp
/// The uncovered part of the frame interior, cut into vertical strips by
/// extending the vertical sides of the fixed rectangles until they hit
/// another fixed rectangle, and the vertices whose left or right side is
/// forced onto a strip boundary.
///
/// Only vertical strips are computed here. Horizontal strips are the
/// vertical strips of the instance turned a quarter clockwise
/// (rotate_instance).

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/frame.hpp"
#include "recdual/geometry.hpp"
#include "recdual/rel.hpp"

namespace recdual {

enum class Axis { kVertical, kHorizontal };

/// A vertical strip [lo, hi] x [bottom, top] between start rectangle
/// (below) and end rectangle (above). Horizontal strips use the same type
/// in rotated coordinates.
struct Strip {
  Axis axis = Axis::kVertical;
  Rational lo, hi;       // x-range of a vertical strip
  Rational bottom, top;  // extent along the strip
  VertexId start = kNoVertex;
  VertexId end = kNoVertex;
  std::vector<VertexId> left_touch;   // fixed rectangles whose right side lies on x = lo, bottom to top
  std::vector<VertexId> right_touch;  // fixed rectangles whose left side lies on x = hi, bottom to top

  Rect rect() const { return Rect{lo, hi, bottom, top}; }
};

/// Vertical strips of a framed partial dual, sorted by left side and then
/// bottom, so every strip comes after all strips to its left.
inline std::vector<Strip> decompose(const PlaneGraph& g, const PartialDual& p) {
  const OuterQuad& o = g.outer();
  Rect in = frame_interior(p, o);
  std::vector<std::pair<VertexId, Rect>> inner;
  std::vector<Rational> xs{in.x1, in.x2};
  for (const auto& [v, r] : p.fixed) {
    if (g.is_outer(v)) continue;
    inner.emplace_back(v, r);
    xs.push_back(r.x1);
    xs.push_back(r.x2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Strip> done;
  // Pieces of the previous slab, keyed by (bottom, top, start, end), still open to the right.
  std::map<std::tuple<Rational, Rational, VertexId, VertexId>, Strip> open;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rational& a = xs[k];
    const Rational& b = xs[k + 1];
    std::vector<std::pair<Rational, VertexId>> cover;  // (bottom, vertex) of rectangles spanning the slab
    for (const auto& [v, r] : inner)
      if (r.x1 <= a && r.x2 >= b) cover.emplace_back(r.y1, v);
    std::sort(cover.begin(), cover.end());
    std::map<std::tuple<Rational, Rational, VertexId, VertexId>, Strip> next;
    Rational y = in.y1;
    VertexId below = o.south;
    auto piece = [&](const Rational& top, VertexId above) {
      if (!(y < top)) return;
      auto key = std::make_tuple(y, top, below, above);
      auto it = open.find(key);
      Strip s;
      if (it != open.end()) {
        s = it->second;
        open.erase(it);
      } else {
        s.lo = a;
        s.bottom = y;
        s.top = top;
        s.start = below;
        s.end = above;
      }
      s.hi = b;
      next.emplace(key, s);
    };
    for (const auto& [y1, v] : cover) {
      piece(y1, v);
      y = p.at(v).y2;
      below = v;
    }
    piece(in.y2, o.north);
    for (auto& [key, s] : open) done.push_back(s);
    open = std::move(next);
  }
  for (auto& [key, s] : open) done.push_back(s);
  for (Strip& s : done) {
    std::vector<std::pair<Rational, VertexId>> l, r;
    for (const auto& [v, rect] : p.fixed) {
      if (overlap_length(rect.y1, rect.y2, s.bottom, s.top) <= Rational(0)) continue;
      if (rect.x2 == s.lo) l.emplace_back(rect.y1, v);
      if (rect.x1 == s.hi) r.emplace_back(rect.y1, v);
    }
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    for (auto& e : l) s.left_touch.push_back(e.second);
    for (auto& e : r) s.right_touch.push_back(e.second);
  }
  std::sort(done.begin(), done.end(),
            [](const Strip& a, const Strip& b) { return std::tie(a.lo, a.bottom) < std::tie(b.lo, b.bottom); });
  return done;
}

/// Whether strip a lies directly left of strip b (they share part of a side).
inline bool directly_left(const Strip& a, const Strip& b) {
  return a.hi == b.lo && overlap_length(a.bottom, a.top, b.bottom, b.top) > Rational(0);
}

/// Graph, labeling and partial dual turned a quarter clockwise: (x, y) goes
/// to (y, -x). Blue edges become red, red edges become blue and reversed,
/// and the outer vertices shift: vW becomes the new vN, vN the new vE, vE
/// the new vS, vS the new vW.
struct RotatedInstance {
  PlaneGraph graph;
  Rel rel;
  PartialDual partial;
};

inline Rect rotate_rect(const Rect& r) { return Rect{r.y1, r.y2, -r.x2, -r.x1}; }
inline Rect unrotate_rect(const Rect& r) { return Rect{-r.y2, -r.y1, r.x1, r.x2}; }

/// With `with_rel` false the labeling is left empty; callers then work from
/// rotate_kinds.
inline RotatedInstance rotate_instance(const PlaneGraph& g, const Rel& rel, const PartialDual& p,
                                       bool with_rel = true) {
  const OuterQuad& o = g.outer();
  OuterQuad q{o.west, o.north, o.east, o.south};  // new north, east, south, west
  RotatedInstance out{g.with_outer(q), Rel{}, PartialDual{}};
  for (const auto& [v, r] : p.fixed) out.partial.fixed[v] = rotate_rect(r);
  if (!with_rel) return out;
  std::vector<LabeledEdge> edges;
  edges.reserve(rel.edges.size());
  for (const LabeledEdge& e : rel.edges) {
    if (e.layer == Layer::kVertical)
      edges.push_back({e.from, e.to, Layer::kHorizontal});
    else
      edges.push_back({e.to, e.from, Layer::kVertical});
  }
  out.rel = Rel(std::move(edges));
  return out;
}

/// Outlines of the strips of both axes of a framed partial dual.
inline std::vector<Rect> strip_outlines(const PlaneGraph& g, const PartialDual& framed) {
  std::vector<Rect> out;
  for (const Strip& s : decompose(g, framed)) out.push_back(s.rect());
  RotatedInstance rot = rotate_instance(g, Rel{}, framed, false);
  for (const Strip& s : decompose(rot.graph, rot.partial)) out.push_back(unrotate_rect(s.rect()));
  return out;
}

/// Vertices whose left (right) side must lie on the left (right) side of
/// each strip.
struct BoundedSets {
  std::vector<std::vector<VertexId>> left, right;  // per strip
};

namespace detail {

/// Closure of the seeds along edges that are the extreme (leftmost when
/// `left`) outgoing edge of the lower and extreme incoming edge of the
/// upper endpoint, never leaving the strip through its start or end.
/// `stamp` marks members with `id`.
inline std::vector<VertexId> bounded_closure(const StDigraph& l1, const std::vector<char>& fixed,
                                             std::vector<int>& stamp, int id, const Strip& strip,
                                             const std::vector<VertexId>& seeds, bool left) {
  std::vector<VertexId> out;
  auto add = [&](VertexId x) {
    if (stamp[x] == id) return;
    stamp[x] = id;
    out.push_back(x);
  };
  for (VertexId s : seeds) add(s);
  auto out_edge = [&](VertexId x) { return left ? l1.out[x].front() : l1.out[x].back(); };
  auto in_edge = [&](VertexId x) { return left ? l1.in[x].front() : l1.in[x].back(); };
  for (std::size_t i = 0; i < out.size(); ++i) {
    VertexId y = out[i];
    if (!l1.out[y].empty() && y != strip.end) {
      VertexId x = out_edge(y);
      if (!fixed[x] && !l1.in[x].empty() && in_edge(x) == y) add(x);
    }
    if (!l1.in[y].empty() && y != strip.start) {
      VertexId x = in_edge(y);
      if (!fixed[x] && !l1.out[x].empty() && out_edge(x) == y) add(x);
    }
  }
  return out;
}

}  // namespace detail

/// Left- and right-bounded vertices of every strip. Seeds: the start/end
/// rectangle when its side is aligned with the strip side, and free
/// vertices joined by a red edge to a fixed rectangle touching the strip
/// side. The free neighbors along a fixed side are split by the fixed
/// neighbors there; each gap belongs to the strip covering it.
inline BoundedSets bounded_vertices(const PlaneGraph& g, const LayerGraphs& lg, const PartialDual& p,
                                    const std::vector<Strip>& strips) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(strips.size());
  std::vector<char> fixed(n, 0);
  for (const auto& [v, r] : p.fixed) fixed[v] = 1;
  std::vector<std::vector<VertexId>> ls(k), rs(k);
  for (int i = 0; i < k; ++i) {
    for (VertexId e : {strips[i].start, strips[i].end}) {
      if (p.at(e).x1 == strips[i].lo) ls[i].push_back(e);
      if (p.at(e).x2 == strips[i].hi) rs[i].push_back(e);
    }
  }
  auto strip_at = [&](const Rational& x, bool left_side, const Rational& y) {
    for (int i = 0; i < k; ++i)
      if ((left_side ? strips[i].lo : strips[i].hi) == x && strips[i].bottom < y && y < strips[i].top) return i;
    return -1;
  };
  for (const auto& [t, r] : p.fixed) {
    for (bool left_side : {true, false}) {
      const auto& nbrs = left_side ? lg.horizontal.out[t] : lg.horizontal.in[t];
      const Rational x = left_side ? r.x2 : r.x1;
      auto& seeds = left_side ? ls : rs;
      Rational from = r.y1;
      std::vector<VertexId> gap;
      auto flush = [&](const Rational& to) {
        if (!gap.empty() && from < to) {
          int i = strip_at(x, left_side, (from + to) / Rational(2));
          if (i >= 0) seeds[i].insert(seeds[i].end(), gap.begin(), gap.end());
        }
        gap.clear();
      };
      for (VertexId w : nbrs) {
        if (!fixed[w]) {
          gap.push_back(w);
          continue;
        }
        flush(p.at(w).y1);
        from = p.at(w).y2;
      }
      flush(r.y2);
    }
  }
  BoundedSets b;
  std::vector<int> lstamp(n, -1), rstamp(n, -1);
  for (int i = 0; i < k; ++i) {
    b.left.push_back(detail::bounded_closure(lg.vertical, fixed, lstamp, i, strips[i], ls[i], true));
    b.right.push_back(detail::bounded_closure(lg.vertical, fixed, rstamp, i, strips[i], rs[i], false));
  }
  return b;
}

inline BoundedSets bounded_vertices(const PlaneGraph& g, const Rel& rel, const PartialDual& p,
                                    const std::vector<Strip>& strips) {
  return bounded_vertices(g, layer_graphs(g, rel), p, strips);
}

/// Half-edge kinds of the rotated instance, from those of the original.
inline std::vector<EdgeKind> rotate_kinds(const std::vector<EdgeKind>& kind) {
  std::vector<EdgeKind> out(kind.size());
  for (std::size_t h = 0; h < kind.size(); ++h) {
    switch (kind[h]) {
      case kBlueOut: out[h] = kRedOut; break;
      case kBlueIn: out[h] = kRedIn; break;
      case kRedOut: out[h] = kBlueIn; break;
      case kRedIn: out[h] = kBlueOut; break;
      default: out[h] = kind[h];
    }
  }
  return out;
}

}  // namespace recdual
