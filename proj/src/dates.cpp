#include "lppl/dates.hpp"

#include <cctype>
#include <cstdio>

#include "lppl/errors.hpp"

namespace lppl {

namespace {

namespace chr = std::chrono;

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Date parse_date(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
        !all_digits(text, 0, 4) || !all_digits(text, 5, 7) || !all_digits(text, 8, 10)) {
        throw DataError("invalid date '" + text + "', expected YYYY-MM-DD");
    }
    int y = std::stoi(text.substr(0, 4));
    unsigned mo = static_cast<unsigned>(std::stoi(text.substr(5, 2)));
    unsigned d = static_cast<unsigned>(std::stoi(text.substr(8, 2)));

    chr::year_month_day ymd{chr::year{y}, chr::month{mo}, chr::day{d}};
    if (!ymd.ok()) throw DataError("invalid calendar date '" + text + "'");

    auto days = chr::sys_days{ymd}.time_since_epoch().count();
    return Date{static_cast<std::int32_t>(days)};
}

std::string to_iso(Date d) {
    chr::sys_days sd{chr::days{d.days}};
    chr::year_month_day ymd{sd};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

} // namespace lppl
