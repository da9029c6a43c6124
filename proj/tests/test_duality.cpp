#include <gtest/gtest.h>

#include "branchkit/duality.hpp"

using namespace branchkit;

TEST(Duality, Examples) {
  const auto cauchy = duality_dim_report(DualityKind::CauchyGL, {2, 2}, 2);
  EXPECT_EQ(cauchy.lhs, 10);
  EXPECT_EQ(cauchy.rhs, 10);
  EXPECT_TRUE(duality_dim_check(DualityKind::SymSquare, {1, 0}, 3));
  const auto o = duality_dim_report(DualityKind::ODuality, {5, 2}, 2);
  EXPECT_EQ(o.lhs, 55);
  EXPECT_TRUE(o.holds());
}

TEST(Duality, OutsideTheStableRangeIsRefused) {
  EXPECT_THROW(duality_dim_check(DualityKind::ODuality, {4, 2}, 2), StableRangeViolation);
  EXPECT_THROW(duality_dim_check(DualityKind::SpDuality, {1, 2}, 2), StableRangeViolation);
}

TEST(Duality, DegreeZeroIsOne) {
  for (auto k : {DualityKind::CauchyGL, DualityKind::SymSquare, DualityKind::WedgeSquare}) {
    const auto r = duality_dim_report(k, {3, 2}, 0);
    EXPECT_EQ(r.lhs, 1);
    EXPECT_EQ(r.rhs, 1);
  }
}

TEST(Duality, WedgeSquareOfALineIsTrivial) {
  // wedge^2 C^1 = 0, so only degree 0 survives on both sides.
  EXPECT_EQ(duality_dim_report(DualityKind::WedgeSquare, {1, 0}, 3).lhs, 0);
  EXPECT_TRUE(duality_dim_check(DualityKind::WedgeSquare, {1, 0}, 3));
}

TEST(Duality, SmallSweep) {
  for (int d = 0; d <= 5; ++d) {
    for (int n = 1; n <= 3; ++n) {
      for (int p = 1; p <= 3; ++p) EXPECT_TRUE(duality_dim_check(DualityKind::CauchyGL, {n, p}, d));
      EXPECT_TRUE(duality_dim_check(DualityKind::SymSquare, {n, 0}, d));
      EXPECT_TRUE(duality_dim_check(DualityKind::WedgeSquare, {n, 0}, d));
    }
    EXPECT_TRUE(duality_dim_check(DualityKind::ODuality, {3, 1}, d));
    EXPECT_TRUE(duality_dim_check(DualityKind::SpDuality, {1, 1}, d));
  }
}
