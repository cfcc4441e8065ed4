#pragma once

/// \file dual_from_rel.hpp
/// Integer rectangular dual realizing a given labeling, one axis at a time.
///
/// x-coordinates: sides joined by a red edge coincide, and blue neighbors
/// must overlap horizontally. Sides are merged into classes with union-find;
/// each class gets the length of the longest chain of strict inequalities
/// below it, which is the narrowest integer drawing for this labeling.
/// y-coordinates swap the roles of the two layers.

#include <numeric>
#include <utility>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/rel.hpp"

namespace recdual {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

/// Low side of v is 2v, high side 2v + 1. `touch` edges glue the high side
/// of the tail to the low side of the head; `overlap` edges force the first
/// and last neighbors on each side to overlap by at least one unit.
inline std::vector<std::int64_t> axis_layout(int n, const StDigraph& touch, const StDigraph& overlap,
                                             const std::vector<std::pair<int, int>>& glued) {
  UnionFind uf(2 * n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : touch.out[u]) uf.unite(2 * u + 1, 2 * v);
  for (auto [a, b] : glued) uf.unite(a, b);
  std::vector<std::vector<int>> succ(2 * n);
  std::vector<int> indeg(2 * n, 0);
  auto less = [&](int a, int b) {
    int ca = uf.find(a), cb = uf.find(b);
    if (ca == cb) throw InternalError("layout: a side is forced strictly below itself");
    succ[ca].push_back(cb);
    ++indeg[cb];
  };
  for (VertexId u = 0; u < n; ++u) {
    less(2 * u, 2 * u + 1);
    if (!overlap.out[u].empty()) {
      less(2 * u, 2 * overlap.out[u].front() + 1);
      less(2 * overlap.out[u].back(), 2 * u + 1);
    }
    if (!overlap.in[u].empty()) {
      less(2 * u, 2 * overlap.in[u].back() + 1);
      less(2 * overlap.in[u].front(), 2 * u + 1);
    }
  }
  std::vector<std::int64_t> value(2 * n, 0);
  std::vector<int> ready;
  int roots = 0;
  for (int c = 0; c < 2 * n; ++c) {
    if (uf.find(c) != c) continue;
    ++roots;
    if (indeg[c] == 0) ready.push_back(c);
  }
  int done = 0;
  while (!ready.empty()) {
    int c = ready.back();
    ready.pop_back();
    ++done;
    for (int d : succ[c]) {
      value[d] = std::max(value[d], value[c] + 1);
      if (--indeg[d] == 0) ready.push_back(d);
    }
  }
  if (done != roots) throw InternalError("layout: inequalities are cyclic");
  std::vector<std::int64_t> out(2 * n);
  for (int s = 0; s < 2 * n; ++s) out[s] = value[uf.find(s)];
  return out;
}

}  // namespace detail

/// Narrowest and lowest integer dual realizing rel, anchored at (0, 0).
/// Assumes rel is valid for g.
inline Dual dual_from_rel(const PlaneGraph& g, const Rel& rel) {
  const int n = g.vertex_count();
  const OuterQuad& o = g.outer();
  LayerGraphs lg = layer_graphs(g, rel);
  // Frame: vW and vS share the left border, vE and vN the right one;
  // vS and vE the bottom, vW and vN the top.
  auto xs = detail::axis_layout(n, lg.horizontal, lg.vertical,
                                {{2 * o.west, 2 * o.south}, {2 * o.east + 1, 2 * o.north + 1}});
  auto ys = detail::axis_layout(n, lg.vertical, lg.horizontal,
                                {{2 * o.south, 2 * o.east}, {2 * o.west + 1, 2 * o.north + 1}});
  Dual d;
  d.rects.resize(n);
  for (VertexId v = 0; v < n; ++v) d.rects[v] = Rect{xs[2 * v], xs[2 * v + 1], ys[2 * v], ys[2 * v + 1]};
  return d;
}

}  // namespace recdual
