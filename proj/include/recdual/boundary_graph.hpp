#pragma once

/// \file boundary_graph.hpp
/// Boundary graphs: the union of all boundary paths of one axis, built strip
/// by strip without walking a shared stretch of path twice.
///
/// A left path only gets new vertices where they are left-bounded; between
/// those runs it follows the graph built so far. A right path gets the
/// right-bounded runs and the leftmost walks that close the gaps between
/// them, stopping as soon as they hit the graph. The side of each new right
/// path that faces the strip is recorded. An extension is then read off the
/// faces: a side next to a face inside a strip lies strictly inside that
/// strip, any other side sits on the strip side it is bounded by.

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recdual/path_set.hpp"

namespace recdual {

/// Boundary graph of one axis (a subgraph of L1). For the horizontal axis
/// everything is in the rotated instance.
struct AxisBoundaryGraph {
  std::vector<Strip> strips;
  BoundedSets bounded;
  std::vector<std::pair<VertexId, VertexId>> edges;  // tail below head
  std::vector<int> edge_strip;                       // strip that added the edge; -1 between fixed rectangles
  std::vector<int> inside_left;                      // strip lying left of the edge, or -1
};

struct BoundaryGraphs {
  PartialDual framed;
  AxisBoundaryGraph h1, h2;

  /// Total number of edges.
  std::size_t size() const { return h1.edges.size() + h2.edges.size(); }
};

namespace detail {

inline Outcome<AxisBoundaryGraph> compute_axis_graph(const AxisContext& c) {
  const PlaneGraph& g = c.g;
  const StDigraph& l1 = c.lg.vertical;
  const int n = c.n();
  const auto& fixed = c.fixed;
  AxisBoundaryGraph out{c.strips, c.bounded, {}, {}, {}};
  std::vector<int> edge_id(g.half_edge_count(), -1);
  std::vector<char> in_h(n, 0);
  auto add = [&](VertexId a, VertexId b, int strip, bool inside) {
    int h = g.half_edge(a, b);
    if (edge_id[h] >= 0) return;
    edge_id[h] = static_cast<int>(out.edges.size());
    out.edges.emplace_back(a, b);
    out.edge_strip.push_back(strip);
    out.inside_left.push_back(inside ? strip : -1);
    in_h[a] = in_h[b] = 1;
  };
  auto add_path = [&](const std::vector<VertexId>& path, int strip, bool inside) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) add(path[k], path[k + 1], strip, inside);
  };
  for (VertexId a = 0; a < n; ++a)
    if (fixed[a])
      for (VertexId b : l1.out[a])
        if (fixed[b]) add(a, b, -1, false);
  std::vector<int> stamp(n, -1), lb(n, -1);
  int gap = 0;
  for (std::size_t i = 0; i < c.strips.size(); ++i) {
    const Strip& s = c.strips[i];
    const VertexId u = s.start, v = s.end;
    const int si = static_cast<int>(i);
    auto fail = [&](const std::string& why) { return Infeasible{"strip " + std::to_string(i) + ": " + why, {}}; };
    auto name = [](VertexId x) { return std::to_string(x); };
    auto old = [&](VertexId x) { return x != kNoVertex && !fixed[x] && in_h[x]; };
    for (VertexId x : c.bounded.left[i]) lb[x] = si;

    // Left path: left-bounded runs, each continued by its leftmost edges into
    // the existing graph. An unaligned start or end rectangle continues into
    // the rightmost existing vertex next to it.
    std::vector<VertexId> keys(c.bounded.left[i]);
    keys.push_back(u);
    keys.push_back(v);
    auto left = sorted_chains(c, keys);
    if (left.front().front() != u || left.back().back() != v) return fail("left-bounded vertex outside the strip");
    for (std::size_t k = 0; k < left.size(); ++k) {
      auto& ch = left[k];
      if (k > 0) {
        VertexId x = ch.front(), w = kNoVertex;
        if (lb[x] == si) {
          w = l1.in[x].front();
        } else {
          for (auto it = l1.in[x].rbegin(); it != l1.in[x].rend() && w == kNoVertex; ++it)
            if (old(*it)) w = *it;
        }
        if (!old(w)) return fail("left-bounded run at " + name(x) + " does not continue an earlier boundary");
        ch.insert(ch.begin(), w);
      }
      if (k + 1 < left.size()) {
        VertexId y = ch.back(), z = kNoVertex;
        if (lb[y] == si) {
          z = l1.out[y].front();
        } else {
          for (auto it = l1.out[y].rbegin(); it != l1.out[y].rend() && z == kNoVertex; ++it)
            if (old(*it)) z = *it;
        }
        if (!old(z)) return fail("left-bounded run at " + name(y) + " does not continue an earlier boundary");
        ch.push_back(z);
      }
    }
    for (std::size_t k = 0; k + 1 < left.size(); ++k)
      if (c.st[left[k].back()] > c.st[left[k + 1].front()]) return fail("left-bounded runs out of order");
    for (const auto& ch : left) add_path(ch, si, false);

    // Right path.
    std::vector<std::vector<VertexId>> chains;
    if (auto why = forced_right_chains(c, i, chains); !why.empty()) return fail(why);
    std::vector<std::vector<VertexId>> fresh;
    for (std::size_t k = 0; k + 1 < chains.size(); ++k) {
      VertexId a = chains[k].back(), b = chains[k + 1].front();
      ++gap;
      std::vector<VertexId> down{b};
      while (!fixed[down.back()] && !in_h[down.back()]) {
        VertexId y = l1.in[down.back()].front();
        if (fixed[y] && y != u) return fail("walk down from " + name(b) + " hits fixed " + name(y));
        down.push_back(y);
      }
      for (VertexId x : down) stamp[x] = gap;
      std::vector<VertexId> up{a};
      bool met = false;
      while (true) {
        VertexId x = up.back();
        if (stamp[x] == gap) {
          met = true;
          break;
        }
        if (fixed[x] || in_h[x]) break;
        VertexId y = l1.out[x].front();
        if (fixed[y] && y != v) return fail("walk up from " + name(a) + " hits fixed " + name(y));
        up.push_back(y);
      }
      if (met) {
        auto at = std::find(down.begin(), down.end(), up.back());
        up.insert(up.end(), std::make_reverse_iterator(at), down.rend());
        fresh.push_back(std::move(up));
      } else {
        if (c.st[up.back()] > c.st[down.back()])
          return fail("right path cannot be closed between " + name(a) + " and " + name(b));
        fresh.push_back(std::move(up));
        fresh.emplace_back(down.rbegin(), down.rend());
      }
    }
    for (const auto& ch : chains) add_path(ch, si, true);
    for (const auto& w : fresh) add_path(w, si, true);
  }
  return out;
}

/// Side placements read off the faces of a boundary graph.
inline std::optional<std::vector<SidePlacement>> placements_from_graph(const AxisContext& c,
                                                                       const AxisBoundaryGraph& hg) {
  const PlaneGraph& g = c.g;
  const StDigraph& l1 = c.lg.vertical;
  const int n = c.n();
  std::vector<char> wall(g.half_edge_count(), 0);
  for (const auto& [a, b] : hg.edges) {
    int h = g.half_edge(a, b);
    wall[h] = wall[g.twin(h)] = 1;
  }
  // Faces of the boundary graph as groups of faces of G.
  const auto& faces = c.faces;
  UnionFind uf(static_cast<int>(faces.faces.size()));
  for (int h = 0; h < g.half_edge_count(); ++h)
    if (!wall[h]) uf.unite(faces.face_of_half_edge[h], faces.face_of_half_edge[g.twin(h)]);
  std::vector<int> comp(faces.faces.size(), -1);
  int comps = 0;
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    int r = uf.find(static_cast<int>(f));
    if (comp[r] < 0) comp[r] = comps++;
    comp[f] = comp[r];
  }
  std::vector<int> label(comps, -1);
  for (std::size_t e = 0; e < hg.edges.size(); ++e) {
    if (hg.inside_left[e] < 0) continue;
    int k = comp[faces.face_of_half_edge[g.half_edge(hg.edges[e].first, hg.edges[e].second)]];
    if (label[k] >= 0 && label[k] != hg.inside_left[e]) return std::nullopt;
    label[k] = hg.inside_left[e];
  }
  std::vector<int> lb(n, -1), rb(n, -1);
  for (std::size_t i = 0; i < hg.strips.size(); ++i) {
    for (VertexId x : hg.bounded.left[i]) lb[x] = static_cast<int>(i);
    for (VertexId x : hg.bounded.right[i]) rb[x] = static_cast<int>(i);
  }
  std::vector<char> in_h(n, 0);
  for (const auto& [a, b] : hg.edges) in_h[a] = in_h[b] = 1;
  auto inside = [&](int strip) { return SidePlacement::inside(hg.strips[strip].lo, hg.strips[strip].hi); };
  auto face_label = [&](VertexId x, VertexId w) { return label[comp[faces.face_of_half_edge[g.half_edge(x, w)]]]; };
  std::vector<SidePlacement> sides(2 * n);
  for (VertexId x = 0; x < n; ++x) {
    if (c.fixed[x]) {
      sides[2 * x] = SidePlacement::pinned(c.p.at(x).x1);
      sides[2 * x + 1] = SidePlacement::pinned(c.p.at(x).x2);
      continue;
    }
    if (!in_h[x]) {
      int k = face_label(x, g.neighbors(x).front());
      if (k < 0) return std::nullopt;
      sides[2 * x] = sides[2 * x + 1] = inside(k);
      continue;
    }
    VertexId right_in = kNoVertex, left_out = kNoVertex;
    for (auto it = l1.in[x].rbegin(); it != l1.in[x].rend() && right_in == kNoVertex; ++it)
      if (wall[g.half_edge(x, *it)]) right_in = *it;
    for (auto it = l1.out[x].begin(); it != l1.out[x].end() && left_out == kNoVertex; ++it)
      if (wall[g.half_edge(x, *it)]) left_out = *it;
    if (right_in == kNoVertex || left_out == kNoVertex) return std::nullopt;
    int kl = face_label(x, left_out), kr = face_label(x, right_in);
    if (kl >= 0)
      sides[2 * x] = inside(kl);
    else if (lb[x] >= 0)
      sides[2 * x] = SidePlacement::pinned(hg.strips[lb[x]].lo);
    else
      return std::nullopt;
    if (kr >= 0)
      sides[2 * x + 1] = inside(kr);
    else if (rb[x] >= 0)
      sides[2 * x + 1] = SidePlacement::pinned(hg.strips[rb[x]].hi);
    else
      return std::nullopt;
  }
  return sides;
}

/// Both axis contexts of a framed instance, built once and shared by the
/// construction and the drawing. Not movable: the contexts hold references.
struct BoundaryRun {
  BoundaryRun(const PlaneGraph& g, const Rel& rel, const PartialDual& framed)
      : p(framed), rot(rotate_instance(g, rel, p, false)), cv(g, rel, p), ch(cv, rot) {}
  BoundaryRun(const BoundaryRun&) = delete;
  BoundaryRun& operator=(const BoundaryRun&) = delete;

  Outcome<BoundaryGraphs> graphs() const {
    BoundaryGraphs out;
    out.framed = p;
    auto h1 = compute_axis_graph(cv);
    if (!feasible(h1)) return std::get<Infeasible>(h1);
    out.h1 = std::get<AxisBoundaryGraph>(std::move(h1));
    auto h2 = compute_axis_graph(ch);
    if (!feasible(h2)) {
      Infeasible inf = std::get<Infeasible>(h2);
      inf.reason = "horizontal " + inf.reason;
      return inf;
    }
    out.h2 = std::get<AxisBoundaryGraph>(std::move(h2));
    return out;
  }

  std::optional<Dual> draw(const BoundaryGraphs& bg) const {
    return combine_axes(cv, ch, placements_from_graph(cv, bg.h1), placements_from_graph(ch, bg.h2));
  }

  PartialDual p;
  RotatedInstance rot;
  AxisContext cv, ch;
};

}  // namespace detail

/// Boundary graphs of both axes, or the reason the construction fails.
inline Outcome<BoundaryGraphs> compute_boundary_graphs(const PlaneGraph& g, const Rel& rel, const PartialDual& p) {
  auto framed = framed_partial(g, rel, p);
  if (!feasible(framed)) return std::get<Infeasible>(framed);
  return detail::BoundaryRun(g, rel, std::get<PartialDual>(framed)).graphs();
}

/// The extension read off boundary graphs. Throws InternalError when the
/// faces do not determine a drawing.
inline Dual extend_from_boundary_graphs(const PlaneGraph& g, const Rel& rel, const BoundaryGraphs& bg) {
  auto d = detail::BoundaryRun(g, rel, bg.framed).draw(bg);
  if (!d) throw InternalError("boundary graphs do not induce a drawing");
  detail::require_extension(g, rel, bg.framed, *d, "boundary graph method");
  return *d;
}

/// Extension via boundary graphs, or the reason none exists. With `verify`
/// the result is also checked against the full contact conditions.
inline Outcome<Dual> decide_and_extend(const PlaneGraph& g, const Rel& rel, const PartialDual& p, bool verify = true) {
  auto framed = framed_partial(g, rel, p);
  if (!feasible(framed)) return std::get<Infeasible>(framed);
  detail::BoundaryRun run(g, rel, std::get<PartialDual>(framed));
  auto bg = run.graphs();
  if (!feasible(bg)) return std::get<Infeasible>(std::move(bg));
  auto d = run.draw(std::get<BoundaryGraphs>(bg));
  if (!d) return Infeasible{"the faces of the boundary graphs admit no drawing", {}};
  if (verify) detail::require_extension(g, rel, run.p, *d, "boundary graph method");
  return *d;
}

}  // namespace recdual
