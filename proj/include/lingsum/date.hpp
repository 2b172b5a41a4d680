#pragma once

// Calendar dates. Files use ISO-8601 (2015-01-02); report text uses
// ordinal-day renderings ("the 2nd to the 6th of January").

#include <chrono>
#include <compare>
#include <cstdio>
#include <string>

#include "lingsum/error.hpp"

namespace lingsum {

struct Date {
  std::chrono::year_month_day ymd;

  static Date parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char extra = '\0';
    if (std::sscanf(iso.c_str(), "%d-%d-%d%c", &y, &m, &d, &extra) != 3) {
      throw ParseError("bad date '" + iso + "', expected YYYY-MM-DD");
    }
    Date date{std::chrono::year{y} / m / d};
    if (!date.ymd.ok()) {
      throw ParseError("invalid calendar date '" + iso + "'");
    }
    return date;
  }

  std::string to_iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
  }

  // Days since the civil epoch; consecutive dates differ by one.
  long serial() const {
    return std::chrono::sys_days{ymd}.time_since_epoch().count();
  }

  Date plus_days(int n) const {
    return Date{std::chrono::year_month_day{std::chrono::sys_days{ymd} +
                                            std::chrono::days{n}}};
  }

  unsigned day() const { return unsigned(ymd.day()); }
  unsigned month() const { return unsigned(ymd.month()); }
  int year() const { return int(ymd.year()); }

  auto operator<=>(const Date&) const = default;
};

inline long days_between(Date a, Date b) { return b.serial() - a.serial(); }

inline const char* month_name(unsigned month) {
  static const char* kNames[] = {"January",   "February", "March",    "April",
                                 "May",       "June",     "July",     "August",
                                 "September", "October",  "November", "December"};
  if (month < 1 || month > 12) throw DomainError("month out of range");
  return kNames[month - 1];
}

inline std::string day_ordinal(unsigned day) {
  const char* suffix = "th";
  if (day % 100 < 11 || day % 100 > 13) {
    switch (day % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(day) + suffix;
}

// "from the 2nd to the 6th of January", factoring the month when both
// endpoints share it; "from the 28th of December to the 4th of January"
// otherwise.
inline std::string render_day_range(Date start, Date end) {
  if (start.month() == end.month() && start.year() == end.year()) {
    return "from the " + day_ordinal(start.day()) + " to the " +
           day_ordinal(end.day()) + " of " + month_name(start.month());
  }
  return "from the " + day_ordinal(start.day()) + " of " +
         month_name(start.month()) + " to the " + day_ordinal(end.day()) +
         " of " + month_name(end.month());
}

}  // namespace lingsum
