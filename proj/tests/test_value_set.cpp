#include "arfkit/value_set.hpp"

#include <gtest/gtest.h>

#include <vector>

using arfkit::ValueSet;

namespace {

ValueSet vs(std::vector<int> small, int t) { return ValueSet::from_elements(small, t); }

}

TEST(ValueSet, TailIsCanonical) {
    const ValueSet t = ValueSet::tail(4);
    EXPECT_EQ(t.min(), 4);
    EXPECT_EQ(t.threshold(), 4);
    EXPECT_TRUE(t.small_elements().empty());
    EXPECT_FALSE(t.contains(3));
    EXPECT_TRUE(t.contains(1000000000));
}

TEST(ValueSet, FromElementsAbsorbsTrailingRun) {
    // 9, 10 run into the tail at 11
    const ValueSet a = vs({0, 3, 6, 9, 10}, 11);
    EXPECT_EQ(a.threshold(), 9);
    EXPECT_EQ(a.small_elements(), (std::vector<int>{0, 3, 6}));
    EXPECT_EQ(a, vs({0, 3, 6}, 9));
}

TEST(ValueSet, HolesAndMembership) {
    const ValueSet s = vs({0, 3, 6, 9}, 11);
    EXPECT_EQ(s.holes(), 7);
    EXPECT_FALSE(s.contains(10));
    EXPECT_TRUE(s.contains(14));
    EXPECT_FALSE(s.contains(-1));
    EXPECT_EQ(s.to_string(), "{0,3,6,9,11,...}");
}

TEST(ValueSet, NegativeMembers) {
    const ValueSet f = vs({-2, 0}, 1);
    EXPECT_EQ(f.min(), -2);
    EXPECT_FALSE(f.contains(-1));
    EXPECT_TRUE(f.contains(0));
}

TEST(ValueSet, ShiftAndFloor) {
    const ValueSet s = vs({0, 3, 6, 9}, 11);
    EXPECT_EQ(s.shifted(-3), vs({-3, 0, 3, 6}, 8));
    EXPECT_EQ(s.at_least(6), vs({6, 9}, 11));
    EXPECT_EQ(s.at_least(12), ValueSet::tail(12));
}

TEST(ValueSet, SumsetMaximalIdealProduct) {
    const ValueSet m0 = vs({3, 6, 9}, 11);
    const ValueSet m1 = vs({3, 6}, 8);
    EXPECT_EQ(sumset(m0, m1), vs({6, 9}, 11));
}

TEST(ValueSet, SumsetWithZeroAndTails) {
    const ValueSet a = vs({0, 3, 6, 9}, 11);
    EXPECT_EQ(sumset(a, a), a);
    EXPECT_EQ(sumset(a, ValueSet::tail(0)), ValueSet::tail(0));
    EXPECT_EQ(sumset(ValueSet::tail(2), ValueSet::tail(2)), ValueSet::tail(4));
}

TEST(ValueSet, ColonExamples) {
    const ValueSet i = vs({6, 9}, 11);
    const ValueSet m = vs({3, 6, 9}, 11);
    EXPECT_EQ(colon(i, m), vs({3, 6}, 8));
    EXPECT_EQ(colon(m, m), vs({0, 3, 6}, 8));
    EXPECT_EQ(colon(ValueSet::tail(5), ValueSet::tail(5)), ValueSet::tail(0));
}

TEST(ValueSet, ColonOfNonStableMaximalIdeal) {
    // m = {4,6,7,8,10,...} for <4,6,7>; 9 is a gap so 2 and 3 are excluded
    const ValueSet m = vs({4, 6, 7, 8}, 10);
    EXPECT_EQ(colon(m, m), vs({0, 4}, 6));
}

TEST(ValueSet, PowerAndSubset) {
    const ValueSet m = vs({4, 6, 7, 8}, 10);
    EXPECT_EQ(power(m, 2), vs({8}, 10));
    EXPECT_TRUE(power(m, 2).is_subset_of(m));
    EXPECT_FALSE(m.is_subset_of(power(m, 2)));
    EXPECT_THROW(power(m, 0), arfkit::error);
}

TEST(ValueSet, RejectsListedElementsAtThreshold) {
    EXPECT_THROW(vs({0, 5}, 5), arfkit::error);
}
