#include <gtest/gtest.h>

#include <set>

#include "recdual/boundary_graph.hpp"
#include "recdual/generators.hpp"
#include "recdual/lp_layout.hpp"
#include "recdual/path_set.hpp"

using namespace recdual;
using fixtures::kE;
using fixtures::kN;
using fixtures::kS;
using fixtures::kW;

namespace {

std::set<std::pair<VertexId, VertexId>> edge_set(const AxisBoundaryGraph& h) {
  return {h.edges.begin(), h.edges.end()};
}

void expect_valid_extension(const Instance& in, const Dual& d, std::uint64_t seed) {
  ValidationReport rep = check_realizes(in.graph, in.rel, d);
  EXPECT_TRUE(rep.ok()) << seed << ": " << (rep.ok() ? "" : rep.violations.front());
  EXPECT_TRUE(extends(d, in.partial)) << seed;
}

}  // namespace

TEST(BoundaryGraph, PinwheelWithFrameOnly) {
  PlaneGraph g = fixtures::g0();
  auto bg = compute_boundary_graphs(g, fixtures::rel0(), PartialDual{});
  ASSERT_TRUE(feasible(bg));
  const auto& b = std::get<BoundaryGraphs>(bg);
  // The frame's own blue edges plus the single path through the center.
  std::set<std::pair<VertexId, VertexId>> want{{kS, kW}, {kE, kN}, {kS, 4}, {4, kN}};
  EXPECT_EQ(edge_set(b.h1), want);
  EXPECT_EQ(b.h2.edges.size(), 4u);
  Dual d = extend_from_boundary_graphs(g, fixtures::rel0(), b);
  EXPECT_TRUE(check_realizes(g, fixtures::rel0(), d).ok());
}

TEST(BoundaryGraph, FreeRectangleFillsTheGap) {
  auto out = decide_and_extend(fixtures::g1(), fixtures::rel1(), fixtures::p1());
  ASSERT_TRUE(feasible(out));
  EXPECT_EQ(std::get<Dual>(out)[5], (Rect{2, 3, 1, 2}));
  auto bg = compute_boundary_graphs(fixtures::g1(), fixtures::rel1(), fixtures::p1());
  ASSERT_TRUE(feasible(bg));
  Dual d = extend_from_boundary_graphs(fixtures::g1(), fixtures::rel1(), std::get<BoundaryGraphs>(bg));
  EXPECT_EQ(d[5], (Rect{2, 3, 1, 2}));
}

TEST(BoundaryGraph, SampledInstancesAreExtended) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Instance in = sample_instance(15 + static_cast<int>(seed % 50), 1 + static_cast<int>(seed % 8), seed,
                                  seed % 4 != 0);
    auto out = decide_and_extend(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(out)) << seed << ": " << std::get<Infeasible>(out).reason;
    expect_valid_extension(in, std::get<Dual>(out), seed);
  }
}

TEST(BoundaryGraph, SameVerdictAsPathsAndLinearProgram) {
  int yes = 0, no = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Instance in = adversarial_instance(12 + static_cast<int>(seed % 40), 2 + static_cast<int>(seed % 7), seed + 7000,
                                       1 + static_cast<int>(seed % 3));
    bool lp = feasible(extend_via_lp(in.graph, in.rel, in.partial));
    bool paths = feasible(compute_boundary_path_set(in.graph, in.rel, in.partial));
    auto fast = decide_and_extend(in.graph, in.rel, in.partial);
    ASSERT_EQ(lp, paths) << seed;
    ASSERT_EQ(lp, feasible(fast)) << seed << ": "
                                  << (feasible(fast) ? std::string("extended") : std::get<Infeasible>(fast).reason);
    if (lp) expect_valid_extension(in, std::get<Dual>(fast), seed);
    (lp ? yes : no)++;
  }
  EXPECT_GT(yes, 30);
  EXPECT_GT(no, 30);
}

TEST(BoundaryGraph, InfeasibleReasonNamesTheStrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance in = adversarial_instance(30, 5, seed + 300, 2);
    auto bg = compute_boundary_graphs(in.graph, in.rel, in.partial);
    if (feasible(bg)) continue;
    EXPECT_NE(std::get<Infeasible>(bg).reason.find("strip "), std::string::npos) << seed;
  }
}

TEST(BoundaryGraph, OrderPreservingMovesKeepTheVerdict) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance in = adversarial_instance(25, 4, seed + 900, 2);
    bool base = feasible(decide_and_extend(in.graph, in.rel, in.partial));
    for (std::uint64_t k = 0; k < 3; ++k) {
      PartialDual q = order_perturb(in.partial, seed * 10 + k);
      EXPECT_EQ(base, feasible(decide_and_extend(in.graph, in.rel, q))) << seed << "/" << k;
    }
  }
}

TEST(BoundaryGraph, SizeStaysWithinTheEdgeCount) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 50 + static_cast<int>(seed) * 40;
    Instance in = sample_instance(n, 8, seed);
    auto bg = compute_boundary_graphs(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(bg));
    const auto& b = std::get<BoundaryGraphs>(bg);
    // Both graphs are subgraphs of one layer each, with every edge stored once.
    EXPECT_LE(b.size(), static_cast<std::size_t>(in.graph.edge_count()));
    EXPECT_EQ(edge_set(b.h1).size(), b.h1.edges.size());
    EXPECT_EQ(edge_set(b.h2).size(), b.h2.edges.size());
  }
}

TEST(BoundaryGraph, StackedBarsPathsGrowQuadratically) {
  std::size_t prev_paths = 0;
  for (int h : {4, 8, 16, 32}) {
    Instance in = stacked_bars_instance(h, h);
    auto ps = compute_boundary_path_set(in.graph, in.rel, in.partial);
    auto bg = compute_boundary_graphs(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(ps) && feasible(bg));
    const std::size_t paths = std::get<BoundaryPathSet>(ps).size();
    const std::size_t n = static_cast<std::size_t>(in.graph.vertex_count());
    // h strips, each with two paths through all h bars.
    EXPECT_GE(paths, 2u * h * h);
    EXPECT_LE(std::get<BoundaryGraphs>(bg).size(), 3 * n);
    if (prev_paths) EXPECT_GT(paths, 3 * prev_paths);
    prev_paths = paths;
    auto out = decide_and_extend(in.graph, in.rel, in.partial);
    ASSERT_TRUE(feasible(out));
    expect_valid_extension(in, std::get<Dual>(out), static_cast<std::uint64_t>(h));
  }
}

TEST(BoundaryGraph, GraphFromDualRecoversTheFixture) {
  PlaneGraph g = graph_from_dual(fixtures::d1());
  for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), fixtures::g1().degree(v)) << v;
  EXPECT_TRUE(check_realizes(g, extract_rel_from_dual(g, fixtures::d1()), fixtures::d1()).ok());
}
