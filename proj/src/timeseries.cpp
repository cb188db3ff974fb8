#include "lppl/timeseries.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lppl/errors.hpp"

namespace lppl {

namespace {

// Splits one CSV line on commas. Fields may be wrapped in double quotes
// (no embedded commas or quotes); surrounding whitespace is trimmed.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        std::string field = line.substr(start, comma == std::string::npos
                                                   ? std::string::npos
                                                   : comma - start);
        auto first = field.find_first_not_of(" \t\r");
        auto last = field.find_last_not_of(" \t\r");
        field = first == std::string::npos ? "" : field.substr(first, last - first + 1);
        if (field.size() >= 2 && field.front() == '"' && field.back() == '"') {
            field = field.substr(1, field.size() - 2);
        }
        out.push_back(std::move(field));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_price(const std::string& text, const std::string& source, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw DataError(source + ":" + std::to_string(line_no) + ": malformed price '" +
                        text + "'");
    }
    return value;
}

} // namespace

PriceSeries parse_csv(const std::string& text, const CsvSchema& schema,
                      const std::string& source) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw DataError(source + ": empty file");
    ++line_no;
    auto header = split_fields(line);
    auto find_col = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw DataError(source + ": missing column '" + name + "' in header");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    std::size_t date_col = find_col(schema.date_column);
    std::size_t price_col = find_col(schema.price_column);

    PriceSeries series;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto fields = split_fields(line);
        if (fields.size() <= std::max(date_col, price_col)) {
            throw DataError(source + ":" + std::to_string(line_no) + ": expected at least " +
                            std::to_string(std::max(date_col, price_col) + 1) + " fields, got " +
                            std::to_string(fields.size()));
        }
        PricePoint point;
        try {
            point.date = parse_date(fields[date_col]);
        } catch (const DataError& e) {
            throw DataError(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
        point.price = parse_price(fields[price_col], source, line_no);
        if (point.price <= 0.0) {
            throw DataError(source + ":" + std::to_string(line_no) + ": non-positive price " +
                            fields[price_col]);
        }
        series.points.push_back(point);
    }

    std::stable_sort(series.points.begin(), series.points.end(),
                     [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < series.points.size(); ++i) {
        if (series.points[i].date == series.points[i - 1].date) {
            throw DataError(source + ": duplicate date " + to_iso(series.points[i].date));
        }
    }
    if (series.points.size() < 2) {
        throw DataError(source + ": need at least 2 rows, got " +
                        std::to_string(series.points.size()));
    }
    return series;
}

PriceSeries load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    PriceSeries series = parse_csv(buf.str(), schema, path);
    // Default label: file stem.
    auto slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    series.asset_id = dot == std::string::npos ? name : name.substr(0, dot);
    return series;
}

std::string to_csv(const PriceSeries& series, const CsvSchema& schema) {
    std::ostringstream out;
    out << schema.date_column << ',' << schema.price_column << '\n';
    char buf[40];
    for (const auto& p : series.points) {
        std::snprintf(buf, sizeof(buf), "%.17g", p.price);
        out << to_iso(p.date) << ',' << buf << '\n';
    }
    return out.str();
}

void save_csv(const PriceSeries& series, const std::string& path, const CsvSchema& schema) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << to_csv(series, schema);
    if (!out) throw DataError("write failed for '" + path + "'");
}

void validate(const PriceSeries& series) {
    if (series.points.size() < 2) {
        throw DataError("series '" + series.asset_id + "' needs at least 2 points");
    }
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        if (series.points[i].price <= 0.0) {
            throw DataError("series '" + series.asset_id + "' has non-positive price at " +
                            to_iso(series.points[i].date));
        }
        if (i > 0 && !(series.points[i - 1].date < series.points[i].date)) {
            throw DataError("series '" + series.asset_id + "' dates not strictly increasing at " +
                            to_iso(series.points[i].date));
        }
    }
}

PriceSeries resample_daily(const PriceSeries& series) {
    validate(series);
    PriceSeries out;
    out.asset_id = series.asset_id;
    out.points.reserve(static_cast<std::size_t>(series.last_date() - series.first_date()) + 1);

    std::size_t src = 0;
    for (Date d = series.first_date(); d <= series.last_date(); d = d + 1) {
        if (src + 1 < series.points.size() && series.points[src + 1].date <= d) ++src;
        out.points.push_back(PricePoint{d, series.points[src].price});
    }
    return out;
}

PriceSeries weekly_moving_average(const PriceSeries& series) {
    validate(series);
    constexpr int kWindow = 7;
    if (series.points.size() < kWindow) {
        throw DataError("series '" + series.asset_id + "' too short for a weekly moving average (" +
                        std::to_string(series.points.size()) + " < 7 days)");
    }
    for (std::size_t i = 1; i < series.points.size(); ++i) {
        if (series.points[i].date - series.points[i - 1].date != 1) {
            throw DataError("series '" + series.asset_id +
                            "' is not daily-contiguous; resample before smoothing");
        }
    }

    PriceSeries out;
    out.asset_id = series.asset_id;
    out.points.reserve(series.points.size() - (kWindow - 1));
    for (std::size_t i = kWindow - 1; i < series.points.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = i + 1 - kWindow; j <= i; ++j) sum += series.points[j].price;
        out.points.push_back(PricePoint{series.points[i].date, sum / kWindow});
    }
    return out;
}

LogSeries to_log(const PriceSeries& series) {
    validate(series);
    LogSeries out;
    out.asset_id = series.asset_id;
    out.epoch = series.first_date();
    out.log_price.reserve(series.points.size());
    for (const auto& p : series.points) out.log_price.push_back(std::log(p.price));
    return out;
}

} // namespace lppl
