#pragma once

/// \file rel.hpp
/// Regular edge labelings: each inner edge is blue (vertical layer, the two
/// rectangles touch along a horizontal segment, directed upward) or red
/// (horizontal layer, vertical contact segment, directed rightward).

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "recdual/errors.hpp"
#include "recdual/geometry.hpp"
#include "recdual/plane_graph.hpp"

namespace recdual {

/// kVertical is L1 (blue), kHorizontal is L2 (red).
enum class Layer : std::uint8_t { kVertical = 1, kHorizontal = 2 };

inline const char* layer_name(Layer l) { return l == Layer::kVertical ? "L1" : "L2"; }

struct LabeledEdge {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  Layer layer = Layer::kVertical;

  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

struct Rel {
  std::vector<LabeledEdge> edges;

  Rel() = default;
  explicit Rel(std::vector<LabeledEdge> e) : edges(std::move(e)) { std::sort(edges.begin(), edges.end()); }

  friend bool operator==(const Rel& a, const Rel& b) {
    auto x = a.edges, y = b.edges;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
};

/// Position of an edge in the counterclockwise block order around a vertex:
/// red incoming, blue incoming, red outgoing, blue outgoing.
enum EdgeKind : std::int8_t { kUnlabeled = -1, kRedIn = 0, kBlueIn = 1, kRedOut = 2, kBlueOut = 3 };

inline bool is_outer_edge(const PlaneGraph& g, VertexId a, VertexId b) {
  if (!g.is_outer(a) || !g.is_outer(b)) return false;
  const OuterQuad& o = g.outer();
  auto is = [&](VertexId x, VertexId y) { return (a == x && b == y) || (a == y && b == x); };
  return is(o.north, o.east) || is(o.east, o.south) || is(o.south, o.west) || is(o.west, o.north);
}

namespace detail {

/// The four outer edges are labeled by convention: (vS, vW) and (vE, vN)
/// blue, (vW, vN) and (vS, vE) red, so vS owns the lower left corner.
inline std::array<LabeledEdge, 4> outer_edge_labels(const OuterQuad& o) {
  return {LabeledEdge{o.south, o.west, Layer::kVertical}, LabeledEdge{o.east, o.north, Layer::kVertical},
          LabeledEdge{o.west, o.north, Layer::kHorizontal}, LabeledEdge{o.south, o.east, Layer::kHorizontal}};
}

/// Kind of every half-edge as seen from its tail. Missing and duplicate
/// labels are reported through `report` (if given); edges absent from g throw.
inline std::vector<EdgeKind> half_edge_kinds(const PlaneGraph& g, const Rel& rel, ValidationReport* report) {
  std::vector<EdgeKind> kind(g.half_edge_count(), kUnlabeled);
  auto put = [&](const LabeledEdge& e, bool outer) {
    int at = (e.from < 0 || e.to < 0 || e.from >= g.vertex_count() || e.to >= g.vertex_count())
                 ? -1
                 : g.position(e.from, e.to);
    if (at < 0)
      throw InvalidInput("labeled edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") not in graph");
    if (!outer && is_outer_edge(g, e.from, e.to)) {
      if (report) report->add("outer edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") labeled");
      return;
    }
    int h = g.half_edge_at(e.from, at);
    if (kind[h] != kUnlabeled) {
      if (report) report->add("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") labeled twice");
      return;
    }
    bool blue = e.layer == Layer::kVertical;
    kind[h] = blue ? kBlueOut : kRedOut;
    kind[g.twin(h)] = blue ? kBlueIn : kRedIn;
  };
  for (const LabeledEdge& e : outer_edge_labels(g.outer())) put(e, true);
  for (const LabeledEdge& e : rel.edges) put(e, false);
  if (report) {
    for (int h = 0; h < g.half_edge_count(); ++h) {
      if (kind[h] == kUnlabeled && g.tail(h) < g.head(h))
        report->add("edge (" + std::to_string(g.tail(h)) + "," + std::to_string(g.head(h)) + ") unlabeled");
    }
  }
  return kind;
}

/// Index into v's rotation at which the block sequence starts (the first
/// position after a cyclic descent), or 0 if there is none.
inline int block_start(const PlaneGraph& g, const std::vector<EdgeKind>& kind, VertexId v) {
  const int d = g.degree(v);
  for (int i = 0; i < d; ++i) {
    EdgeKind prev = kind[g.half_edge_at(v, (i + d - 1) % d)];
    if (kind[g.half_edge_at(v, i)] < prev) return i;
  }
  return 0;
}

}  // namespace detail

struct LayerGraphs {
  StDigraph vertical;    // L1: source vS, sink vN; lists ordered left to right
  StDigraph horizontal;  // L2: source vW, sink vE; lists ordered bottom to top
};

/// Splits the labeled graph into the two layers, including the outer-edge
/// convention, given the kind of every half-edge. Assumes a valid labeling.
inline LayerGraphs layer_graphs(const PlaneGraph& g, const std::vector<EdgeKind>& kind) {
  const int n = g.vertex_count();
  // Lists: horizontal in, vertical in, horizontal out, vertical out (indexed by kind).
  std::vector<int> sizes[4];
  for (auto& sz : sizes) sz.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (int k = 0; k < g.degree(v); ++k) {
      EdgeKind e = kind[g.half_edge_at(v, k)];
      if (e == kUnlabeled) throw InvalidInput("unlabeled edge at vertex " + std::to_string(v));
      ++sizes[e][v];
    }
  }
  LayerGraphs lg;
  const OuterQuad& o = g.outer();
  lg.vertical = StDigraph{n, Adjacency(sizes[kBlueOut]), Adjacency(sizes[kBlueIn]), o.south, o.north};
  lg.horizontal = StDigraph{n, Adjacency(sizes[kRedOut]), Adjacency(sizes[kRedIn]), o.west, o.east};
  Adjacency* list[4] = {&lg.horizontal.in, &lg.vertical.in, &lg.horizontal.out, &lg.vertical.out};
  for (VertexId v = 0; v < n; ++v) {
    const int d = g.degree(v);
    const int s = detail::block_start(g, kind, v);
    int fill[4] = {0, 0, 0, 0};
    for (int k = 0; k < d; ++k) {
      int i = (s + k) % d;
      EdgeKind e = kind[g.half_edge_at(v, i)];
      // Counterclockwise, red-in runs top to bottom and blue-out right to left.
      int at = (e == kRedIn || e == kBlueOut) ? sizes[e][v] - 1 - fill[e] : fill[e];
      ++fill[e];
      list[e]->at(v, at) = g.neighbors(v)[i];
    }
  }
  return lg;
}

/// Same, straight from the labeling.
inline LayerGraphs layer_graphs(const PlaneGraph& g, const Rel& rel) {
  return layer_graphs(g, detail::half_edge_kinds(g, rel, nullptr));
}

/// Checks labeling completeness, the outer-vertex condition, the four
/// counterclockwise blocks at inner vertices and acyclicity of both layers.
/// Throws InvalidInput when a labeled edge is not an edge of g.
inline ValidationReport validate_rel(const PlaneGraph& g, const Rel& rel) {
  ValidationReport report;
  auto kind = detail::half_edge_kinds(g, rel, &report);
  const OuterQuad& o = g.outer();
  const std::array<std::pair<VertexId, EdgeKind>, 4> outer_rule{
      {{o.west, kRedOut}, {o.south, kBlueOut}, {o.east, kRedIn}, {o.north, kBlueIn}}};
  static const char* names[] = {"red incoming", "blue incoming", "red outgoing", "blue outgoing"};
  for (auto [v, required] : outer_rule) {
    for (int i = 0; i < g.degree(v); ++i) {
      VertexId w = g.neighbors(v)[i];
      if (g.is_outer(w)) continue;
      EdgeKind k = kind[g.half_edge_at(v, i)];
      if (k != kUnlabeled && k != required)
        report.add("outer vertex " + std::to_string(v) + ": inner edge to " + std::to_string(w) + " must be " +
                   names[required]);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_outer(v)) continue;
    const int d = g.degree(v);
    int descents = 0;
    std::array<bool, 4> seen{};
    bool complete = true;
    for (int i = 0; i < d; ++i) {
      EdgeKind k = kind[g.half_edge_at(v, i)];
      EdgeKind prev = kind[g.half_edge_at(v, (i + d - 1) % d)];
      if (k == kUnlabeled || prev == kUnlabeled) {
        complete = false;
        break;
      }
      seen[k] = true;
      if (k < prev) ++descents;
    }
    if (!complete) continue;
    if (descents != 1 || !(seen[0] && seen[1] && seen[2] && seen[3]))
      report.add("vertex " + std::to_string(v) + ": edges do not form four counterclockwise blocks");
  }
  if (report.ok()) {
    LayerGraphs lg = layer_graphs(g, rel);
    try {
      (void)st_order(lg.vertical);
    } catch (const InvalidInput&) {
      report.add("L1 is not acyclic with a single source and sink");
    }
    try {
      (void)st_order(lg.horizontal);
    } catch (const InvalidInput&) {
      report.add("L2 is not acyclic with a single source and sink");
    }
  }
  return report;
}

/// Computes a labeling by sweeping a red path from (vW, vS, vE) up to vN.
/// Each step closes a run of consecutive path vertices whose upper
/// neighbors form a path of fresh vertices; the run grows while an upper
/// neighbor also sits on top of the vertex next to it. Throws InvalidInput
/// for non-PTP input.
inline Rel compute_rel(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const OuterQuad& o = g.outer();
  std::vector<LabeledEdge> labels;
  labels.reserve(g.edge_count());
  std::vector<char> processed(n, 0), on_contour(n, 0), in_run(n, 0);
  std::vector<VertexId> prev(n, kNoVertex), next(n, kNoVertex);
  prev[o.south] = o.west;
  next[o.west] = o.south;
  next[o.south] = o.east;
  prev[o.east] = o.south;
  on_contour[o.west] = on_contour[o.south] = on_contour[o.east] = 1;
  int remaining_inner = n - 4;

  // Upper neighbors of contour vertex c, left to right.
  auto uppers_of = [&](VertexId c, std::vector<VertexId>& out) {
    out.clear();
    const int d = g.degree(c);
    int i = g.position(c, next[c]);
    for (int k = 1; k < d; ++k) {
      VertexId w = g.neighbors(c)[(i + k) % d];
      if (w == prev[c]) break;
      out.push_back(w);
    }
    std::reverse(out.begin(), out.end());
  };

  std::vector<VertexId> run, chain, ups;
  VertexId left_end = kNoVertex, right_end = kNoVertex;
  auto build = [&](VertexId v) {
    if (!on_contour[v] || v == o.west || v == o.east) return false;
    VertexId first = v, last = v;
    while (true) {
      bool grew = false;
      uppers_of(first, ups);
      if (ups.empty()) return false;
      VertexId a = prev[first];
      if (a != o.west && g.adjacent(ups.front(), prev[a])) {
        first = a;
        grew = true;
      }
      uppers_of(last, ups);
      if (ups.empty()) return false;
      VertexId b = next[last];
      if (b != o.east && g.adjacent(ups.back(), next[b])) {
        last = b;
        grew = true;
      }
      if (!grew) break;
    }
    left_end = prev[first];
    right_end = next[last];
    run.clear();
    chain.clear();
    for (VertexId c = first;; c = next[c]) {
      run.push_back(c);
      uppers_of(c, ups);
      if (ups.empty()) return false;
      std::size_t from = 0;
      if (!chain.empty()) {
        if (chain.back() != ups.front()) return false;
        from = 1;
      }
      chain.insert(chain.end(), ups.begin() + static_cast<std::ptrdiff_t>(from), ups.end());
      if (c == last) break;
    }
    for (VertexId c : run) in_run[c] = 1;
    bool ok = true;
    for (std::size_t j = 0; ok && j < chain.size(); ++j) {
      VertexId u = chain[j];
      if (u == o.north || processed[u] || on_contour[u]) {
        ok = false;
        break;
      }
      for (VertexId w : g.neighbors(u)) {
        if (!on_contour[w] || in_run[w]) continue;
        if ((w == left_end && j == 0) || (w == right_end && j + 1 == chain.size())) continue;
        ok = false;
        break;
      }
    }
    for (VertexId c : run) in_run[c] = 0;
    return ok;
  };

  std::vector<VertexId> stack{o.south};
  auto close = [&]() {
    for (VertexId c : run) {
      uppers_of(c, ups);
      for (VertexId u : ups) labels.push_back({c, u, Layer::kVertical});
    }
    labels.push_back({left_end, chain.front(), Layer::kHorizontal});
    for (std::size_t j = 0; j + 1 < chain.size(); ++j)
      labels.push_back({chain[j], chain[j + 1], Layer::kHorizontal});
    labels.push_back({chain.back(), right_end, Layer::kHorizontal});
    for (VertexId c : run) {
      processed[c] = 1;
      on_contour[c] = 0;
    }
    VertexId left = left_end;
    for (VertexId u : chain) {
      on_contour[u] = 1;
      prev[u] = left;
      next[left] = u;
      left = u;
      --remaining_inner;
    }
    next[left] = right_end;
    prev[right_end] = left;
    stack.push_back(left_end);
    stack.push_back(right_end);
    for (VertexId u : chain) stack.push_back(u);
  };

  while (true) {
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      if (build(v)) close();
    }
    // Safety net: rescan the contour once before declaring the sweep finished.
    bool progressed = false;
    for (VertexId v = next[o.west]; v != o.east; v = next[v]) {
      if (build(v)) {
        close();
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  if (remaining_inner != 0) throw InvalidInput("compute_rel: graph is not a PTP graph (sweep got stuck)");
  for (VertexId v = next[o.west]; v != o.east; v = next[v]) {
    uppers_of(v, ups);
    if (ups.size() != 1 || ups.front() != o.north) throw InvalidInput("compute_rel: sweep got stuck below vN");
    labels.push_back({v, o.north, Layer::kVertical});
  }
  Rel rel(std::move(labels));
  if (static_cast<int>(rel.edges.size()) != g.edge_count() - 4)
    throw InvalidInput("compute_rel: graph is not a PTP graph (label count mismatch)");
  return rel;
}

/// Reads the labeling off a rectangular dual: horizontal contact segments give
/// blue edges directed upward, vertical ones red edges directed rightward.
inline Rel extract_rel_from_dual(const PlaneGraph& g, const Dual& dual) {
  if (static_cast<int>(dual.rects.size()) != g.vertex_count())
    throw InvalidDual("dual has " + std::to_string(dual.rects.size()) + " rectangles for " +
                      std::to_string(g.vertex_count()) + " vertices");
  std::vector<LabeledEdge> labels;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v < u || is_outer_edge(g, u, v)) continue;
      switch (contact(dual[u], dual[v])) {
        case ContactKind::kLeftOf: labels.push_back({u, v, Layer::kHorizontal}); break;
        case ContactKind::kRightOf: labels.push_back({v, u, Layer::kHorizontal}); break;
        case ContactKind::kBelow: labels.push_back({u, v, Layer::kVertical}); break;
        case ContactKind::kAbove: labels.push_back({v, u, Layer::kVertical}); break;
        case ContactKind::kNone:
          throw InvalidDual("no contact of positive length between " + std::to_string(u) + " and " +
                            std::to_string(v));
      }
    }
  }
  return Rel(std::move(labels));
}

namespace fixtures {

/// The unique labeling of g0().
inline Rel rel0() {
  return Rel({{kW, 4, Layer::kHorizontal}, {4, kE, Layer::kHorizontal}, {kS, 4, Layer::kVertical},
              {4, kN, Layer::kVertical}});
}

/// Labeling of g1() with a left of b.
inline Rel rel1() {
  return Rel({{kW, 4, Layer::kHorizontal}, {4, 5, Layer::kHorizontal}, {5, kE, Layer::kHorizontal},
              {kS, 4, Layer::kVertical}, {4, kN, Layer::kVertical}, {kS, 5, Layer::kVertical},
              {5, kN, Layer::kVertical}});
}

}  // namespace fixtures

}  // namespace recdual
