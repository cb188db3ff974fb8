#pragma once

#include <span>
#include <vector>

#include "lppl/calibrate.hpp"

namespace lppl {

// Post-fit confidence filters. A fit counts toward an indicator only when
// it shows more than min_oscillations log-periodic cycles inside its window
// and its power-law trend exceeds the oscillation by more than min_damping.
struct FilterConfig {
    double min_oscillations = 2.5;
    double min_damping = 0.5;

    void validate() const;  // throws ConfigError unless both are > 0
};

// Number of log-periodic oscillations inside [t1, t2]:
//   (omega / 2*pi) * ln((tc - t1) / (tc - t2)).
// Positive for every accepted fit since tc > t2 > t1.
double oscillation_count(const WindowFit& fit);

// Trend-to-oscillation ratio m*|B| / (omega*|C|) with C = sqrt(C1^2+C2^2).
// C = 0 yields +infinity: no oscillation trivially passes the filter.
double damping(const WindowFit& fit);

// Both filters, with strict inequalities: boundary-equal values fail.
bool passes_filter(const WindowFit& fit, const FilterConfig& config = {});

// Per-anchor bubble indicators with the underlying counts. pos/neg are the
// filter pass fractions within the B<0 / B>0 fit groups; a group with no
// members contributes 0.
struct IndicatorPoint {
    int t2 = 0;
    Date anchor_date;
    double pos = 0.0;
    double neg = 0.0;
    int b_neg_count = 0;  // fits with B < 0 (super-exponential rise)
    int b_neg_pass = 0;
    int b_pos_count = 0;  // fits with B > 0 (super-exponential fall)
    int b_pos_pass = 0;
};

// Indicators for one anchor's fits (all sharing the same t2). B exactly 0
// joins neither group. anchor_date is left at its default; indicator_series
// resolves dates against the table epoch.
IndicatorPoint indicators(std::span<const WindowFit> fits, const FilterConfig& config = {});

// One IndicatorPoint per anchor, in date order.
std::vector<IndicatorPoint> indicator_series(const FitTable& table,
                                             const FilterConfig& config = {});

} // namespace lppl
