#include "dsf/date.hpp"

#include <cstdio>

namespace dsf {
namespace {

// Digits-only field of exactly n characters, no signs, no whitespace.
bool parse_fixed_int(std::string_view text, std::size_t pos, std::size_t n, int& out) {
  if (pos + n > text.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + n; ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = value;
  return true;
}

}  // namespace

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12) return 0;
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[month - 1];
}

std::optional<Date> Date::make(int year, int month, int day) {
  if (year < 1 || year > 9999) return std::nullopt;
  if (month < 1 || month > 12) return std::nullopt;
  if (day < 1 || day > days_in_month(year, month)) return std::nullopt;
  return Date(year, month, day);
}

std::optional<Date> Date::parse(std::string_view text) {
  int year = 0;
  int month = 1;
  int day = 1;
  if (text.size() == 4) {
    if (!parse_fixed_int(text, 0, 4, year)) return std::nullopt;
  } else if (text.size() == 7) {
    if (!parse_fixed_int(text, 0, 4, year) || text[4] != '-' ||
        !parse_fixed_int(text, 5, 2, month)) {
      return std::nullopt;
    }
  } else if (text.size() == 10) {
    if (!parse_fixed_int(text, 0, 4, year) || text[4] != '-' ||
        !parse_fixed_int(text, 5, 2, month) || text[7] != '-' ||
        !parse_fixed_int(text, 8, 2, day)) {
      return std::nullopt;
    }
  } else {
    return std::nullopt;
  }
  return make(year, month, day);
}

std::string Date::to_string() const {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02d", year_, month_, day_);
  return buffer;
}

Date Date::plus_years(int years) const {
  int y = year_ + years;
  int d = day_;
  int max_day = days_in_month(y, month_);
  if (d > max_day) d = max_day;
  return Date(y, month_, d);
}

}  // namespace dsf
