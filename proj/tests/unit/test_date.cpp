#include "dsf/date.hpp"

#include <gtest/gtest.h>

namespace {

using dsf::Date;

TEST(Date, MakeAcceptsRealCalendarDates) {
  EXPECT_TRUE(Date::make(2020, 2, 29).has_value());
  EXPECT_TRUE(Date::make(1, 1, 1).has_value());
  EXPECT_TRUE(Date::make(9999, 12, 31).has_value());
  EXPECT_TRUE(Date::make(2000, 2, 29).has_value());  // divisible by 400
}

TEST(Date, MakeRejectsImpossibleDates) {
  EXPECT_FALSE(Date::make(2021, 2, 29).has_value());
  EXPECT_FALSE(Date::make(1900, 2, 29).has_value());  // divisible by 100, not 400
  EXPECT_FALSE(Date::make(2020, 13, 1).has_value());
  EXPECT_FALSE(Date::make(2020, 0, 1).has_value());
  EXPECT_FALSE(Date::make(2020, 4, 31).has_value());
  EXPECT_FALSE(Date::make(2020, 1, 0).has_value());
  EXPECT_FALSE(Date::make(0, 1, 1).has_value());
  EXPECT_FALSE(Date::make(10000, 1, 1).has_value());
}

TEST(Date, ParseNormalizesPartialDates) {
  EXPECT_EQ(Date::parse("2019")->to_string(), "2019-01-01");
  EXPECT_EQ(Date::parse("2023-12")->to_string(), "2023-12-01");
  EXPECT_EQ(Date::parse("2023-06-15")->to_string(), "2023-06-15");
  EXPECT_EQ(Date::parse("0042")->to_string(), "0042-01-01");
}

TEST(Date, ParseRejectsMalformedText) {
  EXPECT_FALSE(Date::parse("").has_value());
  EXPECT_FALSE(Date::parse("abc").has_value());
  EXPECT_FALSE(Date::parse("2020-1-1").has_value());
  EXPECT_FALSE(Date::parse("20-01-01").has_value());
  EXPECT_FALSE(Date::parse("2020-13").has_value());
  EXPECT_FALSE(Date::parse("2020-02-30").has_value());
  EXPECT_FALSE(Date::parse("2020-06-15T12:00").has_value());
  EXPECT_FALSE(Date::parse("2020-06-15 ").has_value());
  EXPECT_FALSE(Date::parse("-2020-06-15").has_value());
}

TEST(Date, ToStringZeroPads) {
  EXPECT_EQ(Date::make(7, 3, 4)->to_string(), "0007-03-04");
}

TEST(Date, PlusYearsClampsLeapDay) {
  Date leap = *Date::make(2020, 2, 29);
  EXPECT_EQ(leap.plus_years(1).to_string(), "2021-02-28");
  EXPECT_EQ(leap.plus_years(4).to_string(), "2024-02-29");
  EXPECT_EQ(Date::make(2019, 6, 30)->plus_years(5).to_string(), "2024-06-30");
}

TEST(Date, OrdersChronologically) {
  EXPECT_LT(*Date::make(2019, 12, 31), *Date::make(2020, 1, 1));
  EXPECT_LT(*Date::make(2020, 1, 31), *Date::make(2020, 2, 1));
  EXPECT_LT(*Date::make(2020, 2, 1), *Date::make(2020, 2, 2));
  EXPECT_EQ(*Date::make(2020, 2, 2), *Date::parse("2020-02-02"));
}

TEST(Date, LeapYearRule) {
  EXPECT_TRUE(dsf::is_leap_year(2024));
  EXPECT_TRUE(dsf::is_leap_year(2000));
  EXPECT_FALSE(dsf::is_leap_year(2023));
  EXPECT_FALSE(dsf::is_leap_year(1900));
  EXPECT_EQ(dsf::days_in_month(2024, 2), 29);
  EXPECT_EQ(dsf::days_in_month(2023, 2), 28);
  EXPECT_EQ(dsf::days_in_month(2023, 4), 30);
  EXPECT_EQ(dsf::days_in_month(2023, 7), 31);
}

}  // namespace
