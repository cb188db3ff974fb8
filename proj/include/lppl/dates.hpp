#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>

namespace lppl {

// Calendar day, stored as days since 1970-01-01 (proleptic Gregorian).
// All pipeline math runs on integer day offsets; Date only appears at the
// ingestion and reporting edges.
struct Date {
    std::int32_t days = 0;

    friend auto operator<=>(const Date&, const Date&) = default;

    Date operator+(int n) const { return Date{days + n}; }
    Date operator-(int n) const { return Date{days - n}; }
    int operator-(const Date& other) const { return days - other.days; }
};

// Parses strict ISO-8601 "YYYY-MM-DD". Throws DataError on anything else,
// including calendar-invalid dates such as 2021-02-30.
Date parse_date(const std::string& text);

// Formats as "YYYY-MM-DD".
std::string to_iso(Date d);

} // namespace lppl
