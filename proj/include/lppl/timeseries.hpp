#pragma once

#include <string>
#include <vector>

#include "lppl/dates.hpp"

namespace lppl {

// One daily observation. price must be positive so the log-price exists.
struct PricePoint {
    Date date;
    double price = 0.0;
};

// Ordered daily price observations for one asset, in USD.
// Dates are strictly increasing; after resample_daily() they form a
// contiguous daily grid.
struct PriceSeries {
    std::string asset_id;
    std::vector<PricePoint> points;

    std::size_t size() const { return points.size(); }
    Date first_date() const { return points.front().date; }
    Date last_date() const { return points.back().date; }
};

// Log-transformed series on an integer day axis: log_price[i] = ln(price at
// epoch + i). All calibration math runs on this form.
struct LogSeries {
    std::string asset_id;
    Date epoch;                      // calendar day of index 0
    std::vector<double> log_price;   // index i <-> day offset i

    std::size_t size() const { return log_price.size(); }
    Date date_at(int t_index) const { return epoch + t_index; }
};

// Column names for CSV ingestion/emission.
struct CsvSchema {
    std::string date_column = "date";
    std::string price_column = "price";
};

// Reads a header CSV (comma-delimited, UTF-8) into a PriceSeries sorted by
// date. Throws DataError naming the line for malformed rows, non-positive
// prices, and duplicate dates.
PriceSeries load_csv(const std::string& path, const CsvSchema& schema = {});

// Parses CSV text that was already read from disk; `source` names it in
// error messages.
PriceSeries parse_csv(const std::string& text, const CsvSchema& schema = {},
                      const std::string& source = "<memory>");

// Serializes back to the same CSV shape load_csv reads.
std::string to_csv(const PriceSeries& series, const CsvSchema& schema = {});
void save_csv(const PriceSeries& series, const std::string& path, const CsvSchema& schema = {});

// Expands the series to one point per calendar day between its first and
// last dates, carrying the last observed price forward across gaps.
// Idempotent.
PriceSeries resample_daily(const PriceSeries& series);

// Trailing 7-day arithmetic mean on a daily-contiguous series. The first 6
// days have no full window and are dropped, so the output is 6 points
// shorter. Throws DataError when fewer than 7 points are available.
PriceSeries weekly_moving_average(const PriceSeries& series);

// Natural log of each price on the integer day axis.
LogSeries to_log(const PriceSeries& series);

// Validates the PriceSeries invariants (positive prices, strictly
// increasing dates, length >= 2). Throws DataError on violation.
void validate(const PriceSeries& series);

} // namespace lppl
