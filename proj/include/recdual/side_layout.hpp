#pragma once

/// \file side_layout.hpp
/// x-coordinates of a dual when every side is either pinned to a value or
/// known to lie strictly inside an open interval.
///
/// Sides glued by red edges form classes; blue neighbors give strict
/// inequalities between classes. A class is placed between the largest
/// value forced below it and the smallest value forced above it, at a
/// fraction given by its depth among unpinned classes, which keeps every
/// strict inequality.

#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "recdual/dual_from_rel.hpp"
#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/rel.hpp"

namespace recdual {

struct SidePlacement {
  enum class Kind { kNone, kPinned, kInside };
  Kind kind = Kind::kNone;
  Rational lo, hi;  // pinned: value lo; inside: open interval (lo, hi)

  static SidePlacement pinned(const Rational& v) { return {Kind::kPinned, v, v}; }
  static SidePlacement inside(const Rational& a, const Rational& b) { return {Kind::kInside, a, b}; }
};

/// Low and high x of every vertex (index 2v and 2v + 1), or nullopt when the
/// placements contradict the labeling. Every side needs a placement.
inline std::optional<std::vector<Rational>> layout_x(const PlaneGraph& g, const LayerGraphs& lg,
                                                     const std::vector<SidePlacement>& sides) {
  const int n = g.vertex_count();
  const OuterQuad& o = g.outer();
  detail::UnionFind uf(2 * n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : lg.horizontal.out[u]) uf.unite(2 * u + 1, 2 * v);
  uf.unite(2 * o.west, 2 * o.south);
  uf.unite(2 * o.east + 1, 2 * o.north + 1);
  std::vector<int> cls(2 * n, -1);
  int k = 0;
  for (int s = 0; s < 2 * n; ++s)
    if (uf.find(s) == s) cls[s] = k++;
  for (int s = 0; s < 2 * n; ++s) cls[s] = cls[uf.find(s)];

  // Strict inequalities between classes.
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(5 * n);
  auto less = [&](int a, int b) { arcs.emplace_back(cls[a], cls[b]); };
  for (VertexId u = 0; u < n; ++u) {
    less(2 * u, 2 * u + 1);
    const auto out = lg.vertical.out[u];
    const auto in = lg.vertical.in[u];
    if (!out.empty()) {
      less(2 * u, 2 * out.front() + 1);
      less(2 * out.back(), 2 * u + 1);
    }
    if (!in.empty()) {
      less(2 * u, 2 * in.back() + 1);
      less(2 * in.front(), 2 * u + 1);
    }
  }
  for (const auto& [a, b] : arcs)
    if (a == b) return std::nullopt;
  // Flat successor or predecessor lists.
  auto csr = [&](bool forward, std::vector<int>& off, std::vector<int>& val) {
    off.assign(k + 1, 0);
    val.resize(arcs.size());
    for (const auto& [a, b] : arcs) ++off[(forward ? a : b) + 1];
    for (int c = 0; c < k; ++c) off[c + 1] += off[c];
    std::vector<int> fill(off.begin(), off.end() - 1);
    for (const auto& [a, b] : arcs) forward ? val[fill[a]++] = b : val[fill[b]++] = a;
  };
  std::vector<int> so, sv;
  csr(true, so, sv);
  std::vector<int> indeg(k, 0), order, ready;
  for (const auto& arc : arcs) ++indeg[arc.second];
  order.reserve(k);
  for (int c = 0; c < k; ++c)
    if (indeg[c] == 0) ready.push_back(c);
  while (!ready.empty()) {
    int c = ready.back();
    ready.pop_back();
    order.push_back(c);
    for (int i = so[c]; i < so[c + 1]; ++i)
      if (--indeg[sv[i]] == 0) ready.push_back(sv[i]);
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;

  // From here on classes are numbered in topological order.
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  for (auto& [a, b] : arcs) a = pos[a], b = pos[b];
  for (int& c : cls) c = pos[c];
  std::vector<int> po, pv;
  csr(true, so, sv);
  csr(false, po, pv);

  std::vector<std::optional<Rational>> pin(k), below(k), above(k);
  for (int s = 0; s < 2 * n; ++s) {
    const SidePlacement& sp = sides[s];
    int c = cls[s];
    if (sp.kind == SidePlacement::Kind::kPinned) {
      if (pin[c] && *pin[c] != sp.lo) return std::nullopt;
      pin[c] = sp.lo;
    } else if (sp.kind == SidePlacement::Kind::kInside) {
      if (!below[c] || *below[c] < sp.lo) below[c] = sp.lo;
      if (!above[c] || sp.hi < *above[c]) above[c] = sp.hi;
    } else {
      throw InternalError("side " + std::to_string(s) + " has no placement");
    }
  }
  // below[c]: every value of c must exceed it; above[c]: stay below it.
  auto raise = [](std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (b && (!a || *a < *b)) a = b;
  };
  auto drop = [](std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (b && (!a || *b < *a)) a = b;
  };
  std::vector<int> depth(k, 0);
  int max_depth = 0;
  for (int c = 0; c < k; ++c) {
    for (int i = po[c]; i < po[c + 1]; ++i) {
      int p = pv[i];
      raise(below[c], pin[p] ? pin[p] : below[p]);
      if (!pin[p]) depth[c] = std::max(depth[c], depth[p]);
    }
    if (!pin[c]) max_depth = std::max(max_depth, ++depth[c]);
  }
  for (int c = k - 1; c >= 0; --c)
    for (int i = so[c]; i < so[c + 1]; ++i) drop(above[c], pin[sv[i]] ? pin[sv[i]] : above[sv[i]]);
  std::vector<Rational> value(k);
  for (int c = 0; c < k; ++c) {
    if (pin[c]) {
      if ((below[c] && !(*below[c] < *pin[c])) || (above[c] && !(*pin[c] < *above[c]))) return std::nullopt;
      value[c] = *pin[c];
      continue;
    }
    if (!below[c] || !above[c]) throw InternalError("unbounded side class");
    if (!(*below[c] < *above[c])) return std::nullopt;
    value[c] = *below[c] + (*above[c] - *below[c]) * Rational(depth[c]) / Rational(max_depth + 1);
  }
  std::vector<Rational> out(2 * n);
  for (int s = 0; s < 2 * n; ++s) out[s] = value[cls[s]];
  return out;
}

inline std::optional<std::vector<Rational>> layout_x(const PlaneGraph& g, const Rel& rel,
                                                     const std::vector<SidePlacement>& sides) {
  return layout_x(g, layer_graphs(g, rel), sides);
}

}  // namespace recdual
