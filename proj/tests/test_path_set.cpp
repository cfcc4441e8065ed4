#include <gtest/gtest.h>

#include <set>

#include "recdual/generators.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/path_set.hpp"
#include "recdual/strips.hpp"

using namespace recdual;

namespace {

Rational area(const Rect& r) { return (r.x2 - r.x1) * (r.y2 - r.y1); }

PartialDual framed(const Instance& in) { return std::get<PartialDual>(ensure_frame(in.graph, in.partial)); }

// Bounded vertices by definition: restricted to vertices on start -> end
// paths, seeded by every red neighbor of a touching fixed rectangle, closed
// under extreme-edge chains.
std::set<VertexId> oracle_bounded(const Instance& in, const PartialDual& p, const Strip& s, bool left) {
  LayerGraphs lg = layer_graphs(in.graph, in.rel);
  const StDigraph& l1 = lg.vertical;
  const int n = in.graph.vertex_count();
  auto reach = [&](VertexId from, bool forward) {
    std::set<VertexId> seen{from};
    std::vector<VertexId> stack{from};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (x == (forward ? s.end : s.start)) continue;
      for (VertexId y : forward ? l1.out[x] : l1.in[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    return seen;
  };
  auto fw = reach(s.start, true), bw = reach(s.end, false);
  auto inside = [&](VertexId x) { return fw.count(x) && bw.count(x); };
  std::set<VertexId> out;
  for (VertexId e : {s.start, s.end})
    if (left ? p.at(e).x1 == s.lo : p.at(e).x2 == s.hi) out.insert(e);
  for (VertexId t : left ? s.left_touch : s.right_touch)
    for (VertexId x : left ? lg.horizontal.out[t] : lg.horizontal.in[t])
      if (inside(x) && !p.contains(x)) out.insert(x);
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexId y = 0; y < n; ++y) {
      if (!out.count(y)) continue;
      for (VertexId x = 0; x < n; ++x) {
        if (out.count(x) || p.contains(x) || !inside(x)) continue;
        bool up = !l1.out[y].empty() && !l1.in[x].empty() &&
                  (left ? l1.out[y].front() == x && l1.in[x].front() == y
                        : l1.out[y].back() == x && l1.in[x].back() == y);
        bool down = !l1.in[y].empty() && !l1.out[x].empty() &&
                    (left ? l1.in[y].front() == x && l1.out[x].front() == y
                          : l1.in[y].back() == x && l1.out[x].back() == y);
        if (up || down) out.insert(x), grew = true;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Strips, FrameOnlyGivesOneStripPerAxis) {
  PlaneGraph g = fixtures::g1();
  PartialDual p = std::get<PartialDual>(ensure_frame(g, {}));
  auto v = decompose(g, p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rect(), frame_interior(p, g.outer()));
  EXPECT_EQ(v[0].start, fixtures::kS);
  EXPECT_EQ(v[0].end, fixtures::kN);
  RotatedInstance rot = rotate_instance(g, fixtures::rel1(), p);
  EXPECT_EQ(decompose(rot.graph, rot.partial).size(), 1u);
}

TEST(Strips, StripRightOfFixedRectangle) {
  PlaneGraph g = fixtures::g1();
  PartialDual p = fixtures::p1();
  auto strips = decompose(g, p);
  ASSERT_EQ(strips.size(), 1u);
  const Strip& s = strips[0];
  EXPECT_EQ(s.rect(), (Rect{2, 3, 1, 2}));
  EXPECT_EQ(s.left_touch, std::vector<VertexId>{4});
  EXPECT_EQ(s.right_touch, std::vector<VertexId>{fixtures::kE});
  BoundedSets b = bounded_vertices(g, fixtures::rel1(), p, strips);
  EXPECT_NE(std::find(b.left[0].begin(), b.left[0].end(), 5), b.left[0].end());
  EXPECT_NE(std::find(b.right[0].begin(), b.right[0].end(), 5), b.right[0].end());
}

TEST(Strips, RotationKeepsALabelingValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance in = sample_instance(20, 3, seed);
    RotatedInstance rot = rotate_instance(in.graph, in.rel, in.partial);
    EXPECT_TRUE(validate_rel(rot.graph, rot.rel).ok());
    Dual d;
    for (const Rect& r : in.source.rects) d.rects.push_back(rotate_rect(r));
    EXPECT_TRUE(check_realizes(rot.graph, rot.rel, d).ok());
    EXPECT_EQ(unrotate_rect(rotate_rect(Rect{1, 2, 3, 5})), (Rect{1, 2, 3, 5}));
  }
}

TEST(Strips, PartitionTheFreeArea) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance in = adversarial_instance(40, 6, seed);
    PartialDual p = framed(in);
    Rect box = frame_interior(p, in.graph.outer());
    Rational free = area(box);
    for (const auto& [v, r] : p.fixed)
      if (!in.graph.is_outer(v)) free = free - area(r);
    auto strips = decompose(in.graph, p);
    Rational sum(0);
    for (std::size_t i = 0; i < strips.size(); ++i) {
      const Rect r = strips[i].rect();
      sum = sum + area(r);
      for (const auto& [v, f] : p.fixed) EXPECT_FALSE(interiors_overlap(r, f)) << seed;
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(interiors_overlap(r, strips[j].rect())) << seed;
      if (i > 0) EXPECT_LE(strips[i - 1].lo, strips[i].lo);
    }
    EXPECT_EQ(sum, free) << seed;
  }
}

TEST(Strips, BoundedVerticesMatchDefinitionWhenExtendable) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance in = sample_instance(15 + static_cast<int>(seed % 40), 2 + static_cast<int>(seed % 9), seed);
    PartialDual p = framed(in);
    auto strips = decompose(in.graph, p);
    BoundedSets b = bounded_vertices(in.graph, in.rel, p, strips);
    for (std::size_t i = 0; i < strips.size(); ++i) {
      EXPECT_EQ(std::set<VertexId>(b.left[i].begin(), b.left[i].end()), oracle_bounded(in, p, strips[i], true))
          << seed << " strip " << i;
      EXPECT_EQ(std::set<VertexId>(b.right[i].begin(), b.right[i].end()), oracle_bounded(in, p, strips[i], false))
          << seed << " strip " << i;
    }
  }
}

TEST(PathSet, P1HasSingleColumnStrip) {
  auto set = compute_boundary_path_set(fixtures::g1(), fixtures::rel1(), fixtures::p1());
  ASSERT_TRUE(feasible(set));
  const auto& ps = std::get<BoundaryPathSet>(set);
  ASSERT_EQ(ps.vertical.pairs.size(), 1u);
  EXPECT_EQ(ps.vertical.pairs[0].left, (std::vector<VertexId>{fixtures::kS, 5, fixtures::kN}));
  EXPECT_EQ(ps.vertical.pairs[0].right, (std::vector<VertexId>{fixtures::kS, 5, fixtures::kN}));
  EXPECT_TRUE(check_boundary_path_set(fixtures::g1(), fixtures::rel1(), ps).ok());
  Dual d = extend_from_path_set(fixtures::g1(), fixtures::rel1(), ps);
  EXPECT_EQ(d[5], (Rect{2, 3, 1, 2}));
}

TEST(PathSet, AgreesWithLinearProgramOnSampledInstances) {
  int feasible_count = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Instance in = sample_instance(15 + static_cast<int>(seed % 30), 1 + static_cast<int>(seed % 5), seed,
                                  seed % 3 != 0);
    auto lp = extend_via_lp(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(lp)) << seed;
    auto set = compute_boundary_path_set(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(set)) << seed << ": " << std::get<Infeasible>(set).reason;
    const auto& ps = std::get<BoundaryPathSet>(set);
    ValidationReport rep = check_boundary_path_set(in.graph, in.rel, ps);
    ASSERT_TRUE(rep.ok()) << seed << ": " << rep.violations.front();
    Dual d = extend_from_path_set(in.graph, in.rel, ps);
    EXPECT_TRUE(extends(d, in.partial));
    ++feasible_count;
  }
  EXPECT_EQ(feasible_count, 150);
}

TEST(PathSet, AgreesWithLinearProgramOnMovedRectangles) {
  int yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance in = adversarial_instance(12 + static_cast<int>(seed % 30), 2 + static_cast<int>(seed % 5), seed,
                                       1 + static_cast<int>(seed % 2));
    bool lp = feasible(extend_via_lp(in.graph, in.rel, in.partial));
    auto set = compute_boundary_path_set(in.graph, in.rel, in.partial);
    ASSERT_EQ(lp, feasible(set)) << seed << ": "
                                 << (feasible(set) ? std::string("paths found") : std::get<Infeasible>(set).reason);
    if (lp) {
      const auto& ps = std::get<BoundaryPathSet>(set);
      ValidationReport rep = check_boundary_path_set(in.graph, in.rel, ps);
      ASSERT_TRUE(rep.ok()) << seed << ": " << rep.violations.front();
      extend_from_path_set(in.graph, in.rel, ps);
    }
    (lp ? yes : no)++;
  }
  EXPECT_GT(yes, 20);
  EXPECT_GT(no, 20);
}
