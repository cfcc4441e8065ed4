#include <gtest/gtest.h>

#include <functional>

#include "recdual/dual_from_rel.hpp"
#include "recdual/lp_layout.hpp"
#include "oracles.hpp"

using namespace recdual;
using fixtures::kE;
using fixtures::kN;
using fixtures::kS;
using fixtures::kW;

using oracle::brute_force_min_size;

TEST(LpLayout, RecDualOfG0AcceptsD0) {
  Sdc s = build_recdual(fixtures::g0(), fixtures::rel0(), 1);
  Dual d0 = fixtures::d0();
  SdcSolution sol;
  sol.values.assign(s.variable_count(), 0);
  RectVars vars;
  for (VertexId v = 0; v < 5; ++v) {
    sol.values[vars.x1(v)] = d0[v].x1;
    sol.values[vars.x2(v)] = d0[v].x2;
    sol.values[vars.y1(v)] = d0[v].y1;
    sol.values[vars.y2(v)] = d0[v].y2;
  }
  EXPECT_TRUE(satisfies(s, sol));
  auto r = solve(s);
  ASSERT_TRUE(feasible(r));
  Dual d = dual_from_solution(fixtures::g0(), std::get<SdcSolution>(r));
  EXPECT_TRUE(check_realizes(fixtures::g0(), fixtures::rel0(), d).ok());
}

TEST(LpLayout, ConstraintCountLinear) {
  for (int n : {20, 200, 2000}) {
    PlaneGraph g = generate_ptp(n, 4);
    Sdc s = build_recdual(g, compute_rel(g), 1);
    EXPECT_LE(s.constraints().size(), static_cast<std::size_t>(30 * n));
  }
}

TEST(LpLayout, AxesAreIndependent) {
  PlaneGraph g = generate_ptp(30, 8);
  Sdc s = build_recdual(g, compute_rel(g), 1);
  RectVars vars;
  for (const auto& c : s.constraints()) {
    bool ax = (c.a - vars.base) % 4 < 2, bx = (c.b - vars.base) % 4 < 2;
    EXPECT_EQ(ax, bx);
  }
}

TEST(LpLayout, MinimizedSizesMatchBruteForce) {
  Dual d0 = compute_dual(fixtures::g0(), fixtures::rel0(), true);
  EXPECT_EQ(d0.bounding_box().width(), Rational(3));
  EXPECT_EQ(d0.bounding_box().height(), Rational(3));
  EXPECT_EQ(brute_force_min_size(fixtures::g0(), fixtures::rel0(), 5), std::make_pair(3, 3));
  Dual d1 = compute_dual(fixtures::g1(), fixtures::rel1(), true);
  EXPECT_EQ(d1.bounding_box().width(), Rational(4));
  EXPECT_EQ(d1.bounding_box().height(), Rational(3));
  EXPECT_EQ(brute_force_min_size(fixtures::g1(), fixtures::rel1(), 6), std::make_pair(4, 3));
}

TEST(LpLayout, ComputeDualAgreesWithLayering) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    PlaneGraph g = generate_ptp(5 + static_cast<int>(seed * 11 % 80), seed);
    Rel rel = compute_rel(g);
    Dual a = compute_dual(g, rel, true);
    Dual b = dual_from_rel(g, rel);
    ASSERT_TRUE(check_realizes(g, rel, a).ok()) << seed;
    EXPECT_EQ(a.bounding_box().width(), b.bounding_box().width()) << seed;
    EXPECT_EQ(a.bounding_box().height(), b.bounding_box().height()) << seed;
    Dual c = compute_dual(g, rel, false);
    EXPECT_TRUE(check_realizes(g, rel, c).ok()) << seed;
  }
}

TEST(LpLayout, Epsilon) {
  PartialDual p;
  p.fixed[0] = Rect{0, 1, 0, 2};
  p.fixed[1] = Rect{2, 3, 4, 6};
  EXPECT_EQ(epsilon_for(p, 5), Rational(1, 5));
  PartialDual q;
  q.fixed[4] = Rect{0, 1, 0, 1};
  EXPECT_EQ(epsilon_for(q, 5), Rational(1, 5));
  PartialDual r;
  for (auto& [v, rect] : p.fixed) r.fixed[v] = Rect{rect.x1 * 10, rect.x2 * 10, rect.y1 * 10, rect.y2 * 10};
  EXPECT_EQ(epsilon_for(r, 5), Rational(2));
}

TEST(LpLayout, ExtendP1) {
  auto r = extend_via_lp(fixtures::g1(), fixtures::rel1(), fixtures::p1());
  ASSERT_TRUE(feasible(r));
  const Dual& d = std::get<Dual>(r);
  EXPECT_EQ(d[5], (Rect{2, 3, 1, 2}));
  EXPECT_TRUE(extends(d, fixtures::p1()));
}

TEST(LpLayout, ExtendFullDualIsIdentity) {
  PartialDual p;
  Dual d0 = fixtures::d0();
  for (VertexId v = 0; v < 5; ++v) p.fixed[v] = d0[v];
  auto r = extend_via_lp(fixtures::g0(), fixtures::rel0(), p);
  ASSERT_TRUE(feasible(r));
  EXPECT_EQ(std::get<Dual>(r), d0);
}

TEST(LpLayout, ExtendWithoutFrame) {
  PartialDual p;
  p.fixed[4] = Rect{1, 2, 1, 2};
  auto r = extend_via_lp(fixtures::g0(), fixtures::rel0(), p);
  ASSERT_TRUE(feasible(r));
  EXPECT_TRUE(check_realizes(fixtures::g0(), fixtures::rel0(), std::get<Dual>(r)).ok());
  EXPECT_TRUE(extends(std::get<Dual>(r), p));
}

TEST(LpLayout, InconsistentPartialRejected) {
  PartialDual p;
  p.fixed[4] = Rect{2, 3, 1, 2};
  p.fixed[5] = Rect{1, 2, 1, 2};
  EXPECT_THROW(extend_via_lp(fixtures::g1(), fixtures::rel1(), p), InvalidInput);
  PartialDual q;
  q.fixed[kW] = Rect{0, 1, 0, 1};
  EXPECT_THROW(extend_via_lp(fixtures::g1(), fixtures::rel1(), q), InvalidInput);
}

TEST(LpLayout, FixedContactsMustMatchGraph) {
  PartialDual p = fixtures::p1();
  p.fixed[4] = Rect{1, 3, 1, 2};  // a would touch vE
  EXPECT_THROW(extend_via_lp(fixtures::g1(), fixtures::rel1(), p), InvalidInput);
  p.fixed[4] = Rect{1, Rational(5, 2), 1, Rational(3, 2)};  // a misses vN
  EXPECT_THROW(extend_via_lp(fixtures::g1(), fixtures::rel1(), p), InvalidInput);
}

TEST(LpLayout, FrameCompletionCanBeInfeasible) {
  // a is adjacent to vS but stops short of the bottom of the bounding box.
  PartialDual p;
  p.fixed[4] = Rect{1, 2, Rational(3, 2), 2};
  p.fixed[5] = Rect{2, 3, 1, 2};
  auto r = extend_via_lp(fixtures::g1(), fixtures::rel1(), p);
  EXPECT_FALSE(feasible(r));
}

TEST(LpLayout, SimultaneousDisjoint) {
  std::vector<SimultaneousInstance> in = {{fixtures::g0(), fixtures::rel0()}, {fixtures::g0(), fixtures::rel0()}};
  auto r = simultaneous(in, {});
  ASSERT_TRUE(feasible(r));
  for (const Dual& d : std::get<std::vector<Dual>>(r))
    EXPECT_TRUE(check_realizes(fixtures::g0(), fixtures::rel0(), d).ok());
}

TEST(LpLayout, SimultaneousShared) {
  std::vector<SimultaneousInstance> in = {{fixtures::g0(), fixtures::rel0()}, {fixtures::g1(), fixtures::rel1()}};
  auto r = simultaneous(in, {{SharedRef{0, 4}, SharedRef{1, 4}}});
  ASSERT_TRUE(feasible(r));
  const auto& ds = std::get<std::vector<Dual>>(r);
  EXPECT_EQ(ds[0][4], ds[1][4]);
  EXPECT_TRUE(check_realizes(fixtures::g0(), fixtures::rel0(), ds[0]).ok());
  EXPECT_TRUE(check_realizes(fixtures::g1(), fixtures::rel1(), ds[1]).ok());
}

TEST(LpLayout, SimultaneousContradiction) {
  // Same graph twice with a and b swapped: one copy puts a left of b, the
  // other b left of a.
  std::vector<SimultaneousInstance> in = {{fixtures::g1(), fixtures::rel1()}, {fixtures::g1(), fixtures::rel1()}};
  auto r = simultaneous(in, {{SharedRef{0, 4}, SharedRef{1, 5}}, {SharedRef{0, 5}, SharedRef{1, 4}}});
  ASSERT_FALSE(feasible(r));
  auto total = witness_total(std::get<Infeasible>(r).witness);
  ASSERT_TRUE(total.has_value());
  EXPECT_LT(*total, Rational(0));
  EXPECT_THROW(simultaneous(in, {{SharedRef{0, 4}, SharedRef{2, 0}}}), InvalidInput);
}
