#include "dsf/fraction_map.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace {

using dsf::FractionMap;

TEST(FractionMap, AcceptsSharesSummingBelowOne) {
  auto map = FractionMap::make({{"a", 0.4}, {"b", 0.3}});
  ASSERT_TRUE(map.has_value());
  EXPECT_DOUBLE_EQ(map->sum(), 0.7);
  EXPECT_DOUBLE_EQ(map->max_share(), 0.4);
  EXPECT_EQ(map->size(), 2u);
}

TEST(FractionMap, AcceptsExactlyOneAndBoundaryShares) {
  EXPECT_TRUE(FractionMap::make({{"a", 1.0}}).has_value());
  EXPECT_TRUE(FractionMap::make({{"a", 0.0}, {"b", 1.0}}).has_value());
  EXPECT_TRUE(FractionMap::make({{"a", 0.5}, {"b", 0.5}}).has_value());
}

TEST(FractionMap, ToleratesTinyRoundingOverflow) {
  EXPECT_TRUE(FractionMap::make({{"a", 0.5}, {"b", 0.5 + 5e-10}}).has_value());
  EXPECT_FALSE(FractionMap::make({{"a", 0.5}, {"b", 0.5 + 1e-8}}).has_value());
}

TEST(FractionMap, RejectsOutOfRangeShares) {
  EXPECT_FALSE(FractionMap::make({{"a", -0.1}}).has_value());
  EXPECT_FALSE(FractionMap::make({{"a", 1.1}}).has_value());
  EXPECT_FALSE(FractionMap::make({{"a", 0.8}, {"b", 0.3}}).has_value());
}

TEST(FractionMap, RejectsNonFiniteShares) {
  EXPECT_FALSE(FractionMap::make({{"a", std::nan("")}}).has_value());
  EXPECT_FALSE(FractionMap::make({{"a", std::numeric_limits<double>::infinity()}}).has_value());
}

TEST(FractionMap, EmptyMapIsValidWithZeroSum) {
  auto map = FractionMap::make({});
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(map->empty());
  EXPECT_DOUBLE_EQ(map->sum(), 0.0);
  EXPECT_DOUBLE_EQ(map->max_share(), 0.0);
}

}  // namespace
