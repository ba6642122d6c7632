#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace dsf {

/// Proleptic Gregorian calendar date. Construction goes through make() or
/// parse(), which reject invalid calendar dates, so a Date value is always
/// well-formed.
class Date {
 public:
  /// Rejects out-of-range components (year 1..9999, real month/day combos,
  /// leap years honored).
  static std::optional<Date> make(int year, int month, int day);

  /// Accepts "YYYY", "YYYY-MM", and "YYYY-MM-DD". Partial dates normalize to
  /// the first day of the period: "2019" -> 2019-01-01, "2023-12" -> 2023-12-01.
  static std::optional<Date> parse(std::string_view text);

  int year() const { return year_; }
  int month() const { return month_; }
  int day() const { return day_; }

  /// Normalized ISO form, always "YYYY-MM-DD".
  std::string to_string() const;

  /// Same calendar day `years` later; Feb 29 clamps to Feb 28 when the target
  /// year is not a leap year.
  Date plus_years(int years) const;

  friend auto operator<=>(const Date&, const Date&) = default;

 private:
  Date(int y, int m, int d) : year_(y), month_(m), day_(d) {}

  int year_ = 1;
  int month_ = 1;
  int day_ = 1;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

}  // namespace dsf
