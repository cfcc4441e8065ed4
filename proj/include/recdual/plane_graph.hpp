#pragma once

/// \file plane_graph.hpp
/// Embedded planar graphs given by a counterclockwise rotation system with a
/// designated outer quadrangle (vN, vE, vS, vW).

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recdual/errors.hpp"

namespace recdual {

using VertexId = int;
inline constexpr VertexId kNoVertex = -1;

struct OuterQuad {
  VertexId north = 0;
  VertexId east = 1;
  VertexId south = 2;
  VertexId west = 3;

  std::array<VertexId, 4> as_array() const { return {north, east, south, west}; }
  friend bool operator==(const OuterQuad&, const OuterQuad&) = default;
};

/// Plane graph stored as a rotation system. Half-edges are numbered
/// contiguously per vertex so that per-half-edge data can live in flat arrays.
class PlaneGraph {
 public:
  PlaneGraph() : d_(std::make_shared<const Data>()) {}

  /// Throws InvalidInput when the rotation is not a symmetric simple
  /// adjacency structure or the outer ids are out of range / not distinct.
  PlaneGraph(const std::vector<std::vector<VertexId>>& rotation, OuterQuad outer) : outer_(outer) {
    const int n = static_cast<int>(rotation.size());
    check_outer(n);
    auto d = std::make_shared<Data>();
    d->offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) d->offsets[v + 1] = d->offsets[v] + static_cast<int>(rotation[v].size());
    const int m = d->offsets[n];
    d->sorted.resize(m);
    d->heads.resize(m);
    d->tails.resize(m);
    d->twin.resize(m);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
        VertexId w = rotation[v][i];
        if (w < 0 || w >= n) throw InvalidInput("neighbor id out of range at vertex " + std::to_string(v));
        if (w == v) throw InvalidInput("self-loop at vertex " + std::to_string(v));
        d->sorted[d->offsets[v] + i] = {w, i};
        d->heads[d->offsets[v] + i] = w;
        d->tails[d->offsets[v] + i] = v;
      }
      std::sort(d->sorted.begin() + d->offsets[v], d->sorted.begin() + d->offsets[v + 1]);
      for (int k = d->offsets[v] + 1; k < d->offsets[v + 1]; ++k) {
        if (d->sorted[k].first == d->sorted[k - 1].first)
          throw InvalidInput("neighbor listed twice at vertex " + std::to_string(v));
      }
    }
    d_ = d;
    for (int h = 0; h < m; ++h) {
      VertexId v = d->tails[h], w = d->heads[h];
      int j = position(w, v);
      if (j < 0)
        throw InvalidInput("malformed rotation: " + std::to_string(v) + " lists " + std::to_string(w) +
                           " but not vice versa");
      d->twin[h] = d->offsets[w] + j;
    }
  }

  /// The same embedding with another outer quad. Shares the adjacency data.
  PlaneGraph with_outer(OuterQuad outer) const {
    PlaneGraph g(*this);
    g.outer_ = outer;
    g.check_outer(vertex_count());
    return g;
  }

  int vertex_count() const { return static_cast<int>(d_->offsets.size()) - 1; }
  int edge_count() const { return half_edge_count() / 2; }
  int half_edge_count() const { return d_->offsets.back(); }
  int degree(VertexId v) const { return d_->offsets[v + 1] - d_->offsets[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {d_->heads.data() + d_->offsets[v], d_->heads.data() + d_->offsets[v + 1]};
  }
  std::vector<std::vector<VertexId>> rotation() const {
    std::vector<std::vector<VertexId>> r(vertex_count());
    for (VertexId v = 0; v < vertex_count(); ++v) r[v].assign(neighbors(v).begin(), neighbors(v).end());
    return r;
  }
  const OuterQuad& outer() const { return outer_; }

  bool is_outer(VertexId v) const {
    return v == outer_.north || v == outer_.east || v == outer_.south || v == outer_.west;
  }

  /// Index of w in the rotation of v, or -1.
  int position(VertexId v, VertexId w) const {
    auto first = d_->sorted.begin() + d_->offsets[v];
    auto last = d_->sorted.begin() + d_->offsets[v + 1];
    auto it = std::lower_bound(first, last, std::pair<VertexId, int>{w, -1});
    return (it != last && it->first == w) ? it->second : -1;
  }
  bool adjacent(VertexId v, VertexId w) const { return position(v, w) >= 0; }

  VertexId succ_ccw(VertexId v, VertexId w) const {
    int i = checked_position(v, w);
    return neighbors(v)[(i + 1) % degree(v)];
  }
  VertexId pred_ccw(VertexId v, VertexId w) const {
    int i = checked_position(v, w);
    return neighbors(v)[(i + degree(v) - 1) % degree(v)];
  }

  // Half-edge h = (tail, head).
  int half_edge_at(VertexId v, int index) const { return d_->offsets[v] + index; }
  int half_edge(VertexId v, VertexId w) const { return d_->offsets[v] + checked_position(v, w); }
  int twin(int h) const { return d_->twin[h]; }
  VertexId head(int h) const { return d_->heads[h]; }
  VertexId tail(int h) const { return d_->tails[h]; }

  /// Next half-edge along the face to the left of h (faces are traced
  /// counterclockwise; the outer face appears as (vN, vE, vS, vW)).
  int face_next(int h) const {
    VertexId v = head(h);
    int i = twin(h) - d_->offsets[v];  // (head, tail) as index in v's rotation
    return d_->offsets[v] + (i + degree(v) - 1) % degree(v);
  }

 private:
  struct Data {
    std::vector<int> offsets{0};
    std::vector<std::pair<VertexId, int>> sorted;
    std::vector<int> twin;
    std::vector<VertexId> heads;
    std::vector<VertexId> tails;
  };

  void check_outer(int n) const {
    for (VertexId v : outer_.as_array()) {
      if (v < 0 || v >= n) throw InvalidInput("outer vertex id out of range: " + std::to_string(v));
    }
    auto o = outer_.as_array();
    std::sort(o.begin(), o.end());
    if (std::adjacent_find(o.begin(), o.end()) != o.end()) throw InvalidInput("outer vertices are not distinct");
  }

  int checked_position(VertexId v, VertexId w) const {
    int i = position(v, w);
    if (i < 0) throw InvalidInput("vertices " + std::to_string(v) + " and " + std::to_string(w) + " not adjacent");
    return i;
  }

  std::shared_ptr<const Data> d_;
  OuterQuad outer_;
};

/// Vertex cycles stored back to back.
class FaceList {
 public:
  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const VertexId> operator[](std::size_t f) const {
    return {verts_.data() + offsets_[f], verts_.data() + offsets_[f + 1]};
  }
  void reserve(std::size_t faces, std::size_t verts) {
    offsets_.reserve(faces + 1);
    verts_.reserve(verts);
  }
  void push(VertexId v) { verts_.push_back(v); }
  void close() { offsets_.push_back(static_cast<int>(verts_.size())); }

 private:
  std::vector<int> offsets_{0};
  std::vector<VertexId> verts_;
};

struct FaceSet {
  FaceList faces;                            // counterclockwise vertex cycles
  std::vector<int> face_of_half_edge;        // face to the left of each half-edge
  int outer = -1;
};

/// Traces all faces. The outer face is the one to the left of (vN, vE); it is
/// -1 when vN and vE are not adjacent.
inline FaceSet trace_faces(const PlaneGraph& g) {
  FaceSet fs;
  fs.face_of_half_edge.assign(g.half_edge_count(), -1);
  fs.faces.reserve(g.half_edge_count() / 3 + 2, g.half_edge_count());
  for (int start = 0; start < g.half_edge_count(); ++start) {
    if (fs.face_of_half_edge[start] >= 0) continue;
    const int id = static_cast<int>(fs.faces.size());
    int h = start;
    do {
      if (fs.face_of_half_edge[h] >= 0) throw InvalidInput("face trace does not close");
      fs.face_of_half_edge[h] = id;
      fs.faces.push(g.tail(h));
      h = g.face_next(h);
    } while (h != start);
    fs.faces.close();
  }
  const OuterQuad& o = g.outer();
  if (g.adjacent(o.north, o.east)) fs.outer = fs.face_of_half_edge[g.half_edge(o.north, o.east)];
  return fs;
}

/// Checks the PTP conditions: outer face is the quad (vN, vE, vS, vW), all
/// inner faces are triangles, Euler's formula holds and there is no
/// separating triangle.
inline ValidationReport validate_ptp(const PlaneGraph& g) {
  ValidationReport report;
  const int n = g.vertex_count();
  if (n < 5) report.add("graph needs at least one inner vertex (n >= 5)");
  FaceSet fs;
  try {
    fs = trace_faces(g);
  } catch (const InvalidInput& e) {
    report.add(e.what());
    return report;
  }
  const int faces = static_cast<int>(fs.faces.size());
  if (n - g.edge_count() + faces != 2) {
    report.add("not a planar embedding: V - E + F = " + std::to_string(n - g.edge_count() + faces));
  }
  const OuterQuad& o = g.outer();
  if (fs.outer < 0) {
    report.add("outer face: vN and vE not adjacent");
  } else {
    std::vector<VertexId> expected{o.north, o.east, o.south, o.west};
    std::vector<VertexId> got(fs.faces[fs.outer].begin(), fs.faces[fs.outer].end());
    auto it = std::find(got.begin(), got.end(), o.north);
    if (it != got.end()) std::rotate(got.begin(), it, got.end());
    if (got != expected) report.add("outer face is not the 4-cycle vN, vE, vS, vW");
  }
  std::unordered_set<std::uint64_t> facial;
  auto key = [n](VertexId a, VertexId b, VertexId c) {
    std::array<VertexId, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return (static_cast<std::uint64_t>(t[0]) * n + t[1]) * n + t[2];
  };
  for (int f = 0; f < faces; ++f) {
    if (f == fs.outer) continue;
    const auto cyc = fs.faces[f];
    if (cyc.size() != 3) {
      std::string desc;
      for (VertexId v : cyc) desc += (desc.empty() ? "" : ",") + std::to_string(v);
      report.add("inner face not a triangle: (" + desc + ")");
      continue;
    }
    facial.insert(key(cyc[0], cyc[1], cyc[2]));
  }
  // Triangles via common-neighbor scan per edge (u < v < w).
  std::vector<int> mark(n, -1);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.neighbors(u)) mark[w] = u;
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      for (VertexId w : g.neighbors(v)) {
        if (w <= v || mark[w] != u) continue;
        if (!facial.count(key(u, v, w))) {
          report.add("separating triangle: (" + std::to_string(u) + "," + std::to_string(v) + "," +
                     std::to_string(w) + ")");
        }
      }
    }
  }
  return report;
}

/// Ordered neighbor lists of all vertices, stored back to back.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::initializer_list<std::vector<VertexId>> lists) {
    for (const auto& l : lists) {
      ids_.insert(ids_.end(), l.begin(), l.end());
      offsets_.push_back(static_cast<int>(ids_.size()));
    }
  }
  /// Lists with the given lengths, filled in by `at`.
  explicit Adjacency(const std::vector<int>& sizes) : offsets_(sizes.size() + 1, 0) {
    for (std::size_t v = 0; v < sizes.size(); ++v) offsets_[v + 1] = offsets_[v] + sizes[v];
    ids_.assign(offsets_.back(), kNoVertex);
  }

  std::size_t size() const { return offsets_.size() - 1; }
  std::size_t total() const { return ids_.size(); }
  std::span<const VertexId> operator[](std::size_t v) const {
    return {ids_.data() + offsets_[v], ids_.data() + offsets_[v + 1]};
  }
  std::vector<VertexId> list(std::size_t v) const {
    auto l = (*this)[v];
    return {l.begin(), l.end()};
  }
  VertexId& at(std::size_t v, int i) { return ids_[offsets_[v] + i]; }

 private:
  std::vector<int> offsets_{0};
  std::vector<VertexId> ids_;
};

/// Directed graph with per-vertex ordered out- and in-lists. For the vertical
/// layer the lists run left to right, for the horizontal layer bottom to top.
struct StDigraph {
  int vertex_count = 0;
  Adjacency out;
  Adjacency in;
  VertexId source = kNoVertex;
  VertexId sink = kNoVertex;

  std::size_t edge_count() const { return out.total(); }
  bool has_edge(VertexId a, VertexId b) const {
    return std::find(out[a].begin(), out[a].end(), b) != out[a].end();
  }
};

/// Topological order with the designated source first and sink last.
/// Throws InvalidInput on a directed cycle.
inline std::vector<VertexId> st_order(const StDigraph& d) {
  std::vector<int> indeg(d.vertex_count, 0);
  for (int v = 0; v < d.vertex_count; ++v)
    for (VertexId w : d.out[v]) ++indeg[w];
  std::deque<VertexId> ready;
  if (d.source != kNoVertex) {
    if (indeg[d.source] != 0) throw InvalidInput("source has incoming edges");
    ready.push_back(d.source);
  }
  for (int v = 0; v < d.vertex_count; ++v)
    if (indeg[v] == 0 && v != d.source && v != d.sink) ready.push_back(v);
  std::vector<VertexId> order;
  order.reserve(d.vertex_count);
  auto release = [&](VertexId v) {
    for (VertexId w : d.out[v])
      if (--indeg[w] == 0 && w != d.sink) ready.push_back(w);
  };
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    release(v);
  }
  if (d.sink != kNoVertex) {
    if (indeg[d.sink] != 0) throw InvalidInput("directed cycle detected");
    order.push_back(d.sink);
    if (!d.out[d.sink].empty()) throw InvalidInput("sink has outgoing edges");
  }
  if (static_cast<int>(order.size()) != d.vertex_count) throw InvalidInput("directed cycle detected");
  return order;
}

namespace fixtures {

/// Outer ids shared by the hand-made fixtures.
inline constexpr VertexId kN = 0, kE = 1, kS = 2, kW = 3;

/// Pinwheel: outer quad plus center c = 4.
inline PlaneGraph g0() {
  return PlaneGraph({{kW, 4, kE}, {kN, 4, kS}, {kE, 4, kW}, {kS, 4, kN}, {kE, kN, kW, kS}}, OuterQuad{});
}

/// Outer quad plus a = 4 (adjacent to vW, vS, vN, b) and b = 5 (adjacent to
/// vE, vS, vN, a).
inline PlaneGraph g1() {
  return PlaneGraph({{kW, 4, 5, kE}, {kN, 5, kS}, {kE, 5, 4, kW}, {kS, 4, kN}, {5, kN, kW, kS}, {kE, kN, 4, kS}},
                    OuterQuad{});
}

}  // namespace fixtures

/// Random PTP graph on n >= 5 vertices: starts from the pinwheel and inserts
/// vertices into inner faces, each insertion followed by a flip that removes
/// the triangle around the new vertex. Deterministic per seed.
inline PlaneGraph generate_ptp(int n, std::uint64_t seed) {
  if (n < 5) throw InvalidInput("generate_ptp needs n >= 5");
  std::vector<std::vector<VertexId>> rot = fixtures::g0().rotation();
  rot.reserve(n);
  const OuterQuad outer{};
  auto is_outer = [&](VertexId v) { return v < 4; };
  auto pos = [&](VertexId v, VertexId w) {
    auto it = std::find(rot[v].begin(), rot[v].end(), w);
    return it == rot[v].end() ? -1 : static_cast<int>(it - rot[v].begin());
  };
  auto succ = [&](VertexId v, VertexId w) {
    int i = pos(v, w);
    return rot[v][(i + 1) % rot[v].size()];
  };
  auto insert_after = [&](VertexId v, VertexId after, VertexId x) {
    int i = pos(v, after);
    rot[v].insert(rot[v].begin() + i + 1, x);
  };
  auto erase = [&](VertexId v, VertexId w) { rot[v].erase(rot[v].begin() + pos(v, w)); };
  auto is_face = [&](const std::array<VertexId, 3>& t) {
    int i = pos(t[0], t[1]);
    return i >= 0 && succ(t[0], t[1]) == t[2] && pos(t[1], t[2]) >= 0 && succ(t[1], t[2]) == t[0];
  };

  std::vector<std::array<VertexId, 3>> faces{{4, fixtures::kE, fixtures::kN}, {4, fixtures::kN, fixtures::kW},
                                             {4, fixtures::kW, fixtures::kS}, {4, fixtures::kS, fixtures::kE}};
  std::mt19937_64 rng(seed);
  while (static_cast<int>(rot.size()) < n) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    std::size_t fi = pick(rng);
    std::array<VertexId, 3> f = faces[fi];
    if (!is_face(f)) {
      faces[fi] = faces.back();
      faces.pop_back();
      continue;
    }
    // Candidate flips: edge (f[k], f[k+1]) with apex f[k+2].
    std::array<int, 3> order{0, 1, 2};
    std::shuffle(order.begin(), order.end(), rng);
    bool done = false;
    for (int k : order) {
      VertexId a = f[k], b = f[(k + 1) % 3], c = f[(k + 2) % 3];
      if (is_outer(a) && is_outer(b)) continue;  // outer edge, nothing beyond
      VertexId d = succ(b, a);                   // face (b, a, d) on the other side
      if (d == c || pos(c, d) >= 0) continue;
      const VertexId x = static_cast<VertexId>(rot.size());
      insert_after(a, b, x);
      insert_after(b, c, x);
      insert_after(c, a, x);
      erase(a, b);
      erase(b, a);
      insert_after(d, b, x);
      rot.push_back({a, d, b, c});
      faces[fi] = {x, b, c};
      faces.push_back({x, c, a});
      faces.push_back({x, a, d});
      faces.push_back({x, d, b});
      done = true;
      break;
    }
    (void)done;
  }
  return PlaneGraph(std::move(rot), outer);
}

}  // namespace recdual
