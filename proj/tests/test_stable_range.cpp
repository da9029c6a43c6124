#include <gtest/gtest.h>

#include "branchkit/stable_range.hpp"

using namespace branchkit;

namespace {

LabelData pt(const char* t) { return parse_partition(t); }
LabelData gl(const char* t) { return parse_gl_label(t); }

}  // namespace

TEST(StableRange, ODiagonalExamples) {
  EXPECT_NO_THROW(validate_stable_range(make_query(Pair::ODiagonal, {8, 0}, {pt("[1]"), pt("[1]")}, {pt("[2]")})));
  EXPECT_THROW(validate_stable_range(make_query(Pair::ODiagonal, {3, 0}, {pt("[1]"), pt("[1]")}, {pt("[1]")})),
               StableRangeViolation);
}

TEST(StableRange, BilinearOExample) {
  const auto q = make_query(Pair::OInGL, {4, 0}, {gl("[2,2,1]/[]")}, {pt("[]")});
  try {
    validate_stable_range(q);
    FAIL() << "expected a violation";
  } catch (const StableRangeViolation& e) {
    EXPECT_EQ(e.rule(), "o-in-gl");
    EXPECT_NE(e.inequality().find("3 > 2"), std::string::npos) << e.inequality();
  }
}

TEST(StableRange, ViolationNamesRuleAndInequality) {
  const auto v = stable_range::check(make_query(Pair::ODiagonal, {3, 0}, {pt("[1]"), pt("[1]")}, {pt("[1]")}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->rule, "o-diag");
  EXPECT_NE(v->inequality.find("floor(n/2)"), std::string::npos);
}

TEST(StableRange, GLDiagonalUsesSmallestValidParameters) {
  // lambda longer than mu and nu together: allowed once n covers it.
  const auto q = make_query(Pair::GLDiagonal, {3, 0}, {gl("[1]/[]"), gl("[1]/[]")}, {gl("[1,1,1]/[]")});
  EXPECT_FALSE(stable_range::check(q));
  const auto tight = make_query(Pair::GLDiagonal, {2, 0}, {gl("[1]/[]"), gl("[]/[1]")}, {gl("[1]/[1]")});
  EXPECT_FALSE(stable_range::check(tight));
  const auto over = make_query(Pair::GLDiagonal, {3, 0}, {gl("[1,1]/[]"), gl("[]/[1,1]")}, {gl("[]/[]")});
  EXPECT_TRUE(stable_range::check(over));
}

TEST(StableRange, BilinearBoundsBothHalvesTogether) {
  // Each half has at most n parts, but together they do not.
  const auto q = make_query(Pair::SpInGL, {2, 0}, {gl("[1,1]/[1,1]")}, {pt("[1,1]")});
  EXPECT_TRUE(stable_range::check(q));
  const auto ok = make_query(Pair::SpInGL, {4, 0}, {gl("[1,1]/[1,1]")}, {pt("[1,1]")});
  EXPECT_FALSE(stable_range::check(ok));
  const auto o = make_query(Pair::OInGL, {7, 0}, {gl("[1,1]/[1,1]")}, {pt("[]")});
  EXPECT_TRUE(stable_range::check(o));
  EXPECT_FALSE(stable_range::check(make_query(Pair::OInGL, {8, 0}, {gl("[1,1]/[1,1]")}, {pt("[]")})));
}

TEST(StableRange, DirectSums) {
  EXPECT_FALSE(stable_range::check(make_query(Pair::OSum, {5, 5}, {pt("[2]")}, {pt("[]"), pt("[]")})));
  EXPECT_TRUE(stable_range::check(make_query(Pair::OSum, {3, 5}, {pt("[1,1]")}, {pt("[]"), pt("[]")})));
  EXPECT_FALSE(stable_range::check(make_query(Pair::SpSum, {3, 3}, {pt("[1,1]")}, {pt("[]"), pt("[]")})));
  EXPECT_TRUE(stable_range::check(make_query(Pair::SpSum, {1, 3}, {pt("[1,1]")}, {pt("[]"), pt("[]")})));
  EXPECT_FALSE(
      stable_range::check(make_query(Pair::GLSum, {2, 2}, {gl("[1]/[]")}, {gl("[1]/[]"), gl("[]/[]")})));
  EXPECT_TRUE(
      stable_range::check(make_query(Pair::GLSum, {1, 3}, {gl("[1]/[1]")}, {gl("[1]/[]"), gl("[]/[1]")})));
}

TEST(StableRange, Polarization) {
  EXPECT_FALSE(stable_range::check(make_query(Pair::GLInO, {6, 0}, {pt("[1,1]")}, {gl("[]/[]")})));
  EXPECT_TRUE(stable_range::check(make_query(Pair::GLInSp, {3, 0}, {pt("[1,1]")}, {gl("[]/[]")})));
  EXPECT_TRUE(stable_range::check(make_query(Pair::GLInSp, {4, 0}, {pt("[1]")}, {gl("[1,1,1]/[]")})));
}

TEST(StableRange, LittlewoodRange) {
  EXPECT_FALSE(littlewood_range({2}, {}, Family::O, 6));
  EXPECT_TRUE(littlewood_range({1, 1, 1, 1}, {}, Family::O, 6));
  EXPECT_FALSE(littlewood_range({2, 1}, {1}, Family::Sp, 4));
  EXPECT_TRUE(littlewood_range({1, 1, 1}, {}, Family::Sp, 2));
}

TEST(Labels, RejectInvalidLabels) {
  EXPECT_THROW(RepLabel::gl(2, {1, 1}, {1}), InvalidLabel);
  EXPECT_THROW(RepLabel::o(3, {1, 1, 1, 1}), InvalidLabel);
  EXPECT_NO_THROW(RepLabel::o(3, {1, 1, 1}));
  EXPECT_THROW(RepLabel::sp(1, {1, 1}), InvalidLabel);
  EXPECT_THROW(parse_pair("bogus"), UnknownPair);
  for (Pair p : all_pairs) EXPECT_EQ(parse_pair(pair_id(p)), p);
}

TEST(Labels, QueryShapeIsChecked) {
  EXPECT_THROW(make_query(Pair::ODiagonal, {8, 0}, {pt("[1]")}, {pt("[1]")}), InvalidLabel);
  EXPECT_THROW(make_query(Pair::OSum, {4, 0}, {pt("[1]")}, {pt("[1]"), pt("[]")}), InvalidLabel);
  EXPECT_THROW(make_query(Pair::OInGL, {4, 0}, {gl("[1]/[]")}, {gl("[1]/[1]")}), InvalidLabel);
}
