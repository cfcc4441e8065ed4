#pragma once

/// \file path_set.hpp
/// Boundary paths: for every vertical strip, a left and a right path in L1
/// from the start to the end rectangle, made of the rectangles that would
/// meet the left (right) side of the strip in an extension. Horizontal
/// strips are handled as the vertical strips of the rotated instance.
///
/// Left paths follow the leftmost usable edge. Right paths are first forced
/// through the right-bounded vertices and the gaps closed by walking
/// leftmost usable edges towards the left path.

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/outcome.hpp"
#include "recdual/side_layout.hpp"
#include "recdual/strips.hpp"

namespace recdual {

struct PathPair {
  std::vector<VertexId> left, right;
};

/// Strips, bounded vertices and boundary paths of one axis. For the
/// horizontal axis everything is in the rotated instance.
struct AxisPathSet {
  std::vector<Strip> strips;
  BoundedSets bounded;
  std::vector<PathPair> pairs;
};

struct BoundaryPathSet {
  PartialDual framed;
  AxisPathSet vertical, horizontal;

  /// Total number of vertices on all paths.
  std::size_t size() const {
    std::size_t k = 0;
    for (const AxisPathSet* a : {&vertical, &horizontal})
      for (const PathPair& pp : a->pairs) k += pp.left.size() + pp.right.size();
    return k;
  }
};

namespace detail {

/// Everything about one axis of a framed instance that the path and graph
/// methods look up repeatedly.
struct AxisContext {
  AxisContext(const PlaneGraph& graph, const Rel& labeling, const PartialDual& partial)
      : AxisContext(graph, labeling, partial, half_edge_kinds(graph, labeling, nullptr),
                    std::make_shared<const FaceSet>(trace_faces(graph))) {}

  /// Context of the rotated instance, reusing the faces of `base`.
  AxisContext(const AxisContext& base, const RotatedInstance& rot)
      : AxisContext(rot.graph, rot.rel, rot.partial, rotate_kinds(base.kind), base.face_set) {}

  AxisContext(const PlaneGraph& graph, const Rel& labeling, const PartialDual& partial,
              std::vector<EdgeKind> kinds, std::shared_ptr<const FaceSet> shared_faces)
      : g(graph), rel(labeling), p(partial), kind(std::move(kinds)), lg(layer_graphs(graph, kind)),
        face_set(std::move(shared_faces)), faces(*face_set), fixed(graph.vertex_count(), 0),
        st(graph.vertex_count(), 0) {
    for (const auto& [v, r] : p.fixed) fixed[v] = 1;
    auto order = st_order(lg.vertical);
    for (std::size_t i = 0; i < order.size(); ++i) st[order[i]] = static_cast<int>(i);
    strips = decompose(g, p);
    bounded = bounded_vertices(g, lg, p, strips);
  }

  int n() const { return g.vertex_count(); }
  bool l1_edge(VertexId a, VertexId b) const { return g.adjacent(a, b) && kind[g.half_edge(a, b)] == kBlueOut; }

  const PlaneGraph& g;
  const Rel& rel;
  const PartialDual& p;
  std::vector<EdgeKind> kind;
  LayerGraphs lg;
  std::shared_ptr<const FaceSet> face_set;
  const FaceSet& faces;
  std::vector<char> fixed;
  std::vector<int> st;  // position in a topological order of L1
  std::vector<Strip> strips;
  BoundedSets bounded;
};

/// Faces of G between a left and a right start -> end path, the vertices on
/// or between them, and the L1 half-edges on or between them. ok is false
/// when the area leaks into the outer face.
struct Region {
  bool ok = true;
  std::vector<int> faces;
  std::vector<VertexId> vertices;
  std::vector<int> l1_edges;
};

inline Region region_between(const AxisContext& c, const std::vector<VertexId>& left,
                             const std::vector<VertexId>& right) {
  const PlaneGraph& g = c.g;
  Region r;
  std::vector<char> wall(g.half_edge_count(), 0);
  auto mark = [&](const std::vector<VertexId>& path, char bit) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      int h = g.half_edge(path[i], path[i + 1]);
      wall[h] |= bit;
      wall[g.twin(h)] |= bit;
    }
  };
  mark(left, 1);
  mark(right, 2);
  std::vector<char> seen(c.faces.faces.size(), 0);
  auto seed = [&](int f) {
    if (f == c.faces.outer) r.ok = false;
    if (seen[f] || f == c.faces.outer) return;
    seen[f] = 1;
    r.faces.push_back(f);
  };
  for (std::size_t i = 0; i + 1 < left.size(); ++i) {
    int h = g.half_edge(left[i], left[i + 1]);
    if (wall[h] == 1) seed(c.faces.face_of_half_edge[g.twin(h)]);
  }
  for (std::size_t i = 0; i + 1 < right.size(); ++i) {
    int h = g.half_edge(right[i], right[i + 1]);
    if (wall[h] == 2) seed(c.faces.face_of_half_edge[h]);
  }
  for (std::size_t k = 0; k < r.faces.size(); ++k) {
    const auto cyc = c.faces.faces[r.faces[k]];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int h = g.half_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      if (!wall[h]) seed(c.faces.face_of_half_edge[g.twin(h)]);
    }
  }
  std::vector<char> in(c.n(), 0);
  auto add = [&](VertexId v) {
    if (!in[v]) in[v] = 1, r.vertices.push_back(v);
  };
  std::vector<char> edge_in(g.half_edge_count(), 0);
  auto add_edge = [&](int h) {
    if (c.kind[h] == kBlueIn) h = g.twin(h);
    if (c.kind[h] == kBlueOut && !edge_in[h]) edge_in[h] = 1, r.l1_edges.push_back(h);
  };
  for (const auto* path : {&left, &right})
    for (std::size_t i = 0; i < path->size(); ++i) {
      add((*path)[i]);
      if (i + 1 < path->size()) add_edge(g.half_edge((*path)[i], (*path)[i + 1]));
    }
  for (int f : r.faces) {
    const auto cyc = c.faces.faces[f];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      add(cyc[i]);
      add_edge(g.half_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
  }
  return r;
}

}  // namespace detail

/// p precedes p2 when no L2 path leads from a vertex of p2 to a vertex of
/// p that is not on p2.
inline bool precedes(const StDigraph& l2, const std::vector<VertexId>& p, const std::vector<VertexId>& p2) {
  std::vector<char> on2(l2.vertex_count, 0), seen(l2.vertex_count, 0);
  for (VertexId v : p2) on2[v] = 1;
  std::vector<char> target(l2.vertex_count, 0);
  for (VertexId v : p)
    if (!on2[v]) target[v] = 1;
  std::vector<VertexId> stack(p2.begin(), p2.end());
  for (VertexId v : p2) seen[v] = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : l2.out[x]) {
      if (target[y]) return false;
      if (!seen[y]) seen[y] = 1, stack.push_back(y);
    }
  }
  return true;
}

namespace detail {

/// Groups vertices (sorted along L1) into maximal runs joined by L1 edges.
inline std::vector<std::vector<VertexId>> sorted_chains(const AxisContext& c, std::vector<VertexId> keys) {
  std::sort(keys.begin(), keys.end(), [&](VertexId a, VertexId b) { return c.st[a] < c.st[b]; });
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<std::vector<VertexId>> parts;
  for (VertexId x : keys) {
    if (!parts.empty() && c.l1_edge(parts.back().back(), x))
      parts.back().push_back(x);
    else
      parts.push_back({x});
  }
  return parts;
}

/// Pieces every right path of strip i contains: runs of right-bounded
/// vertices (with start and end), each extended by the rightmost edge at a
/// right-bounded end, overlapping pieces merged. Empty string on success,
/// otherwise why no right path exists.
inline std::string forced_right_chains(const AxisContext& c, std::size_t i, std::vector<std::vector<VertexId>>& out) {
  const Strip& s = c.strips[i];
  const VertexId u = s.start, v = s.end;
  const StDigraph& l1 = c.lg.vertical;
  std::vector<VertexId> keys(c.bounded.right[i]);
  keys.push_back(u);
  keys.push_back(v);
  auto parts = sorted_chains(c, keys);
  if (parts.front().front() != u || parts.back().back() != v) return "right-bounded vertex outside the strip";
  std::vector<char> rb(c.n(), 0);
  for (VertexId x : c.bounded.right[i]) rb[x] = 1;
  for (auto& part : parts) {
    if (part.front() != u && rb[part.front()]) {
      VertexId w = l1.in[part.front()].back();
      if (c.fixed[w] && w != u)
        return "right-bounded " + std::to_string(part.front()) + " sits on fixed " + std::to_string(w);
      part.insert(part.begin(), w);
    }
    if (part.back() != v && rb[part.back()]) {
      VertexId z = l1.out[part.back()].back();
      if (c.fixed[z] && z != v)
        return "right-bounded " + std::to_string(part.back()) + " is below fixed " + std::to_string(z);
      part.push_back(z);
    }
  }
  out.clear();
  for (auto& part : parts) {
    if (!out.empty()) {
      auto& last = out.back();
      auto it = std::find(part.begin(), part.end(), last.back());
      if (it != part.end()) {
        last.insert(last.end(), it + 1, part.end());
        continue;
      }
      auto jt = std::find(last.begin(), last.end(), part.front());
      if (jt != last.end()) {
        last.erase(jt + 1, last.end());
        last.insert(last.end(), part.begin() + 1, part.end());
        continue;
      }
    }
    out.push_back(std::move(part));
  }
  return "";
}

/// Boundary paths of every strip of one axis, strips left to right.
inline Outcome<AxisPathSet> compute_axis_paths(const AxisContext& c) {
  const PlaneGraph& g = c.g;
  const StDigraph& l1 = c.lg.vertical;
  const int n = c.n();
  const auto& fixed = c.fixed;
  AxisPathSet out{c.strips, c.bounded, {}};
  std::vector<char> done(g.half_edge_count(), 0);  // L1 edges of finished regions
  std::vector<char> covered(n, 0);
  for (std::size_t i = 0; i < c.strips.size(); ++i) {
    const Strip& s = c.strips[i];
    const VertexId u = s.start, v = s.end;
    auto fail = [&](const std::string& why) { return Infeasible{"strip " + std::to_string(i) + ": " + why, {}}; };
    auto name = [](VertexId x) { return std::to_string(x); };

    // Vertices of right paths of strips directly to the left that may
    // continue into this strip.
    std::vector<char> carry(n, 0);
    for (std::size_t j = 0; j < i; ++j) {
      if (!directly_left(c.strips[j], s)) continue;
      std::vector<char> rb(n, 0);
      for (VertexId x : c.bounded.right[j]) rb[x] = 1;
      for (VertexId x : out.pairs[j].right)
        if (!rb[x]) carry[x] = 1;
    }
    auto usable_out = [&](VertexId x, VertexId y) {
      return y == v || (!fixed[y] && (carry[y] || !done[g.half_edge(x, y)]));
    };
    auto usable_in = [&](VertexId y, VertexId x) {
      return y == u || (!fixed[y] && (carry[y] || !done[g.half_edge(y, x)]));
    };

    PathPair pp;
    pp.left.push_back(u);
    while (pp.left.back() != v) {
      VertexId x = pp.left.back(), next = kNoVertex;
      for (VertexId y : l1.out[x])
        if (usable_out(x, y)) {
          next = y;
          break;
        }
      if (next == kNoVertex) return fail("left path gets stuck at " + name(x));
      if (static_cast<int>(pp.left.size()) > n) throw InternalError("left path does not terminate");
      pp.left.push_back(next);
    }
    std::vector<int> left_pos(n, -1);
    for (std::size_t k = 0; k < pp.left.size(); ++k) left_pos[pp.left[k]] = static_cast<int>(k);
    for (VertexId x : c.bounded.left[i])
      if (left_pos[x] < 0) return fail("left path misses left-bounded vertex " + name(x));

    // Right path: chains through the right-bounded vertices, joined.
    std::vector<std::vector<VertexId>> chains;
    if (auto why = forced_right_chains(c, i, chains); !why.empty()) return fail(why);
    std::vector<int> down_pos(n, -1);
    pp.right = chains.front();
    for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
      VertexId a = chains[k].back(), b = chains[k + 1].front();
      std::vector<VertexId> down{b};
      while (left_pos[down.back()] < 0) {
        VertexId x = down.back(), next = kNoVertex;
        for (VertexId y : l1.in[x])
          if (usable_in(y, x)) {
            next = y;
            break;
          }
        if (next == kNoVertex || static_cast<int>(down.size()) > n) break;
        down.push_back(next);
      }
      for (std::size_t t = 0; t < down.size(); ++t) down_pos[down[t]] = static_cast<int>(t);
      std::vector<VertexId> up{a};
      bool met = false;
      while (true) {
        VertexId x = up.back();
        if (down_pos[x] >= 0) {
          for (int t = down_pos[x] - 1; t >= 0; --t) up.push_back(down[t]);
          met = true;
          break;
        }
        if (left_pos[x] >= 0) break;
        VertexId next = kNoVertex;
        for (VertexId y : l1.out[x])
          if (usable_out(x, y)) {
            next = y;
            break;
          }
        if (next == kNoVertex || static_cast<int>(up.size()) > n) break;
        up.push_back(next);
      }
      if (!met) {
        VertexId pa = up.back(), pb = down.back();
        if (left_pos[pa] < 0 || left_pos[pb] < 0 || left_pos[pa] > left_pos[pb])
          return fail("right path cannot be closed between " + name(a) + " and " + name(b));
        for (int t = left_pos[pa] + 1; t <= left_pos[pb]; ++t) up.push_back(pp.left[t]);
        for (int t = static_cast<int>(down.size()) - 2; t >= 0; --t) up.push_back(down[t]);
      }
      for (VertexId x : down) down_pos[x] = -1;
      pp.right.insert(pp.right.end(), up.begin() + 1, up.end());
      pp.right.insert(pp.right.end(), chains[k + 1].begin() + 1, chains[k + 1].end());
    }

    std::vector<char> on_right(n, 0);
    for (std::size_t k = 0; k < pp.right.size(); ++k) {
      VertexId x = pp.right[k];
      if (on_right[x]) return fail("right path visits " + name(x) + " twice");
      on_right[x] = 1;
      if (k > 0 && !c.l1_edge(pp.right[k - 1], x)) throw InternalError("right path is not a path in L1");
      if (k > 0 && k + 1 < pp.right.size() && fixed[x]) return fail("right path runs through fixed " + name(x));
    }
    for (VertexId x : c.bounded.right[i])
      if (!on_right[x]) return fail("right path misses right-bounded vertex " + name(x));
    if (!precedes(c.lg.horizontal, pp.left, pp.right)) return fail("left path is not left of the right path");
    for (std::size_t j = 0; j < i; ++j)
      if (directly_left(c.strips[j], s) && !precedes(c.lg.horizontal, out.pairs[j].right, pp.left))
        return fail("left path crosses the right path of strip " + std::to_string(j));
    Region r = region_between(c, pp.left, pp.right);
    if (!r.ok) return fail("boundary paths do not enclose a region");
    for (int h : r.l1_edges) done[h] = 1;
    for (VertexId x : r.vertices) covered[x] = 1;
    out.pairs.push_back(std::move(pp));
  }
  for (VertexId x = 0; x < n; ++x) {
    if (!fixed[x] && !covered[x]) return Infeasible{"vertex " + std::to_string(x) + " lies in no strip", {}};
    for (VertexId y : l1.out[x])
      if (!(fixed[x] && fixed[y]) && !done[g.half_edge(x, y)])
        return Infeasible{"edge " + std::to_string(x) + "->" + std::to_string(y) + " lies in no strip", {}};
  }
  return out;
}

}  // namespace detail

/// Boundary paths of both axes for the framed instance, or the reason the
/// construction fails.
inline Outcome<BoundaryPathSet> compute_boundary_path_set(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  auto framed = framed_partial(g, rel, p);
  if (!feasible(framed)) return std::get<Infeasible>(framed);
  BoundaryPathSet out;
  out.framed = std::get<PartialDual>(framed);
  auto v = detail::compute_axis_paths(detail::AxisContext(g, rel, out.framed));
  if (!feasible(v)) return std::get<Infeasible>(v);
  out.vertical = std::get<AxisPathSet>(std::move(v));
  RotatedInstance rot = rotate_instance(g, rel, out.framed);
  auto h = detail::compute_axis_paths(detail::AxisContext(rot.graph, rot.rel, rot.partial));
  if (!feasible(h)) {
    Infeasible inf = std::get<Infeasible>(h);
    inf.reason = "horizontal " + inf.reason;
    return inf;
  }
  out.horizontal = std::get<AxisPathSet>(std::move(h));
  return out;
}

namespace detail {

/// Checks one axis of a path set against the conditions every boundary path
/// set satisfies.
inline void check_axis_paths(const AxisContext& c, const AxisPathSet& ps, const std::string& axis,
                             ValidationReport& rep) {
  const PlaneGraph& g = c.g;
  const int n = c.n();
  if (ps.pairs.size() != c.strips.size()) {
    rep.add(axis + ": " + std::to_string(ps.pairs.size()) + " path pairs for " + std::to_string(c.strips.size()) +
            " strips");
    return;
  }
  std::vector<char> covered(n, 0), done(g.half_edge_count(), 0);
  bool paths_ok = true;
  for (std::size_t i = 0; i < c.strips.size(); ++i) {
    const Strip& s = c.strips[i];
    const PathPair& pp = ps.pairs[i];
    std::string where = axis + " strip " + std::to_string(i);
    for (const auto* path : {&pp.left, &pp.right}) {
      const char* side = path == &pp.left ? " left" : " right";
      bool ok = !path->empty() && path->front() == s.start && path->back() == s.end;
      std::vector<char> seen(n, 0);
      for (std::size_t k = 0; ok && k < path->size(); ++k) {
        VertexId x = (*path)[k];
        if (x < 0 || x >= n || seen[x]) ok = false;
        else seen[x] = 1;
        if (ok && k > 0 && !c.l1_edge((*path)[k - 1], x)) ok = false;
        if (ok && k > 0 && k + 1 < path->size() && c.fixed[x]) ok = false;
      }
      if (!ok) rep.add(where + side + " path is not a start-to-end path in L1 through free vertices");
      paths_ok = paths_ok && ok;
    }
    if (!paths_ok) continue;
    auto contains = [](const std::vector<VertexId>& path, VertexId x) {
      return std::find(path.begin(), path.end(), x) != path.end();
    };
    for (VertexId x : c.bounded.left[i])
      if (!contains(pp.left, x)) rep.add(where + ": left-bounded " + std::to_string(x) + " not on the left path");
    for (VertexId x : c.bounded.right[i])
      if (!contains(pp.right, x)) rep.add(where + ": right-bounded " + std::to_string(x) + " not on the right path");
    if (!precedes(c.lg.horizontal, pp.left, pp.right)) rep.add(where + ": left path not left of right path");
    Region r = region_between(c, pp.left, pp.right);
    if (!r.ok) rep.add(where + ": paths do not enclose a region");
    for (int h : r.l1_edges) done[h] = 1;
    for (VertexId x : r.vertices) covered[x] = 1;
  }
  if (!paths_ok) return;
  for (std::size_t j = 0; j < c.strips.size(); ++j)
    for (std::size_t i = 0; i < c.strips.size(); ++i)
      if (c.strips[j].hi <= c.strips[i].lo && !precedes(c.lg.horizontal, ps.pairs[j].right, ps.pairs[i].left))
        rep.add(axis + ": right path of strip " + std::to_string(j) + " not left of left path of strip " +
                std::to_string(i));
  for (VertexId x = 0; x < n; ++x) {
    if (!c.fixed[x] && !covered[x]) rep.add(axis + ": vertex " + std::to_string(x) + " in no strip");
    for (VertexId y : c.lg.vertical.out[x])
      if (!(c.fixed[x] && c.fixed[y]) && !done[g.half_edge(x, y)])
        rep.add(axis + ": edge " + std::to_string(x) + "->" + std::to_string(y) + " in no strip");
  }
}

/// Where each x-side goes according to one axis of a path set: pinned to
/// the strip side when the vertex is on the boundary path of its leftmost
/// (rightmost) strip, strictly inside that strip otherwise.
inline std::optional<std::vector<SidePlacement>> placements_from_paths(const AxisContext& c, const AxisPathSet& ps) {
  const int n = c.n();
  std::vector<int> ls(n, -1), rs(n, -1);
  std::vector<char> lpin(n, 0), rpin(n, 0), on_left(n, 0), on_right(n, 0);
  for (std::size_t i = 0; i < ps.pairs.size(); ++i) {
    const PathPair& pp = ps.pairs[i];
    const Strip& s = c.strips[i];
    for (VertexId x : pp.left) on_left[x] = 1;
    for (VertexId x : pp.right) on_right[x] = 1;
    for (VertexId x : region_between(c, pp.left, pp.right).vertices) {
      if (ls[x] < 0 || s.lo < c.strips[ls[x]].lo) ls[x] = static_cast<int>(i), lpin[x] = on_left[x];
      if (rs[x] < 0 || c.strips[rs[x]].hi < s.hi) rs[x] = static_cast<int>(i), rpin[x] = on_right[x];
    }
    for (VertexId x : pp.left) on_left[x] = 0;
    for (VertexId x : pp.right) on_right[x] = 0;
  }
  std::vector<SidePlacement> sides(2 * n);
  for (VertexId x = 0; x < n; ++x) {
    if (c.fixed[x]) {
      sides[2 * x] = SidePlacement::pinned(c.p.at(x).x1);
      sides[2 * x + 1] = SidePlacement::pinned(c.p.at(x).x2);
      continue;
    }
    if (ls[x] < 0) return std::nullopt;
    const Strip& a = c.strips[ls[x]];
    const Strip& b = c.strips[rs[x]];
    sides[2 * x] = lpin[x] ? SidePlacement::pinned(a.lo) : SidePlacement::inside(a.lo, a.hi);
    sides[2 * x + 1] = rpin[x] ? SidePlacement::pinned(b.hi) : SidePlacement::inside(b.lo, b.hi);
  }
  return sides;
}

/// Dual from the x-sides of both axes (the rotated instance's x is y).
inline std::optional<Dual> combine_axes(const AxisContext& cv, const AxisContext& ch,
                                        const std::optional<std::vector<SidePlacement>>& xs_sides,
                                        const std::optional<std::vector<SidePlacement>>& ys_sides) {
  if (!xs_sides || !ys_sides) return std::nullopt;
  auto xs = layout_x(cv.g, cv.lg, *xs_sides);
  auto ys = layout_x(ch.g, ch.lg, *ys_sides);
  if (!xs || !ys) return std::nullopt;
  Dual d;
  d.rects.reserve(cv.n());
  for (VertexId v = 0; v < cv.n(); ++v)
    d.rects.push_back(Rect{(*xs)[2 * v], (*xs)[2 * v + 1], (*ys)[2 * v], (*ys)[2 * v + 1]});
  return d;
}

/// Throws InternalError unless d realizes rel and extends p.
inline void require_extension(const PlaneGraph& g, const Rel& rel, const PartialDual& p, const Dual& d,
                              const char* method) {
  ValidationReport rep = check_realizes(g, rel, d);
  if (!rep.ok()) throw InternalError(std::string(method) + " produced an invalid dual: " + rep.violations.front());
  if (!extends(d, p)) throw InternalError(std::string(method) + " moved a fixed rectangle");
}

}  // namespace detail

/// Empty report when every pair of paths is well formed, contains the
/// bounded vertices, left paths precede right paths, right paths of strips
/// further left precede left paths, and the regions cover L1.
inline ValidationReport check_boundary_path_set(const PlaneGraph& g, const Rel& rel, const BoundaryPathSet& set) {
  ValidationReport rep;
  detail::check_axis_paths(detail::AxisContext(g, rel, set.framed), set.vertical, "vertical", rep);
  RotatedInstance rot = rotate_instance(g, rel, set.framed);
  detail::check_axis_paths(detail::AxisContext(rot.graph, rot.rel, rot.partial), set.horizontal, "horizontal", rep);
  return rep;
}

/// The extension drawn from a boundary path set.
inline Dual extend_from_path_set(const PlaneGraph& g, const Rel& rel, const BoundaryPathSet& set) {
  RotatedInstance rot = rotate_instance(g, rel, set.framed);
  detail::AxisContext cv(g, rel, set.framed);
  detail::AxisContext ch(cv, rot);
  auto d = detail::combine_axes(cv, ch, detail::placements_from_paths(cv, set.vertical),
                                detail::placements_from_paths(ch, set.horizontal));
  if (!d) throw InternalError("boundary paths do not induce a drawing");
  detail::require_extension(g, rel, set.framed, *d, "path method");
  return *d;
}

/// Extension via boundary paths, or the reason none exists.
inline Outcome<Dual> extend_via_paths(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  auto set = compute_boundary_path_set(g, rel, p);
  if (!feasible(set)) return std::get<Infeasible>(std::move(set));
  return extend_from_path_set(g, rel, std::get<BoundaryPathSet>(set));
}

}  // namespace recdual
