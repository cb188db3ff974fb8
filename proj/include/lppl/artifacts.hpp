#pragma once

#include <span>
#include <string>

#include "lppl/calibrate.hpp"
#include "lppl/indicator.hpp"
#include "lppl/timeseries.hpp"

namespace lppl {

// Serialized output tables. CSV is the spreadsheet-facing form (6
// significant digits); JSON carries full precision and everything needed to
// reload a fit table.

// One row per accepted fit:
// anchor_date,t1_date,t2_date,A,B,C1,C2,C,phi,tc_days,m,omega,sse,constraints_ok
std::string fits_to_csv(const FitTable& table);

std::string fits_to_json(const FitTable& table);
FitTable fits_from_json(const std::string& text);

// One row per anchor:
// anchor_date,price,pos,neg,b_neg_count,b_neg_pass,b_pos_count,b_pos_pass
// `prices` is the series the calibration consumed (daily-contiguous), used
// to report the price at each anchor date.
std::string indicators_to_csv(std::span<const IndicatorPoint> points,
                              const PriceSeries& prices);

std::string indicators_to_json(const std::string& asset_id,
                               std::span<const IndicatorPoint> points,
                               const PriceSeries& prices);

// Small file helpers shared by the CLI and tests. Throw DataError on I/O
// failure, naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Fixed-notation formatting used by all CSV artifacts: 6 significant
// digits, locale-independent.
std::string format_g6(double v);

} // namespace lppl
