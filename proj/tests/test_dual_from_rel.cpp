#include <gtest/gtest.h>

#include "recdual/dual_from_rel.hpp"
#include "recdual/verify.hpp"

using namespace recdual;

TEST(DualFromRel, G0IsPinwheel) {
  Dual d = dual_from_rel(fixtures::g0(), fixtures::rel0());
  EXPECT_EQ(d, fixtures::d0());
}

TEST(DualFromRel, G1RealizesAndIsSmall) {
  Dual d = dual_from_rel(fixtures::g1(), fixtures::rel1());
  EXPECT_TRUE(check_realizes(fixtures::g1(), fixtures::rel1(), d).ok());
  Rect box = d.bounding_box();
  EXPECT_LE(box.width(), Rational(6));
  EXPECT_LE(box.height(), Rational(6));
  EXPECT_EQ(d, fixtures::d1());
}

TEST(DualFromRel, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    int n = 5 + static_cast<int>(seed * 37 % 196);
    PlaneGraph g = generate_ptp(n, seed);
    Rel rel = compute_rel(g);
    Dual d = dual_from_rel(g, rel);
    auto rep = check_realizes(g, rel, d);
    ASSERT_TRUE(rep.ok()) << "seed " << seed << ": " << rep.violations.front();
    EXPECT_EQ(extract_rel_from_dual(g, d), rel);
    Rect box = d.bounding_box();
    EXPECT_LE(box.width(), Rational(n));
    EXPECT_LE(box.height(), Rational(n));
  }
}
