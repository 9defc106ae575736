#pragma once

#include <chrono>
#include <cstdio>
#include <string>

#include "wordlecast/error.hpp"

namespace wordlecast {

using Date = std::chrono::year_month_day;

// Day indices are anchored so that 2023-03-01 is day 419, which places
// day 1 on 2022-01-07.  The index is affine in the date: consecutive
// calendar days get consecutive indices.
inline constexpr std::chrono::year_month_day kDayOneDate{
    std::chrono::year{2022}, std::chrono::month{1}, std::chrono::day{7}};

inline long day_index_of(const Date& date) {
    using namespace std::chrono;
    const sys_days anchor{kDayOneDate};
    const sys_days d{date};
    return static_cast<long>((d - anchor).count()) + 1;
}

inline Date date_of(long day_index) {
    using namespace std::chrono;
    const sys_days anchor{kDayOneDate};
    return year_month_day{anchor + days{day_index - 1}};
}

/// Saturday and Sunday count as weekend.
inline bool is_weekend(const Date& date) {
    const std::chrono::weekday wd{std::chrono::sys_days{date}};
    return wd.iso_encoding() >= 6;
}

inline bool is_weekend(long day_index) { return is_weekend(date_of(day_index)); }

inline Date parse_date(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3) {
        throw ParseError("invalid date '" + text + "' (expected YYYY-MM-DD)");
    }
    const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!date.ok()) {
        throw ParseError("invalid calendar date '" + text + "'");
    }
    return date;
}

inline std::string format_date(const Date& date) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return std::string(buf);
}

inline Date next_day(const Date& date) {
    using namespace std::chrono;
    return year_month_day{sys_days{date} + days{1}};
}

} // namespace wordlecast
