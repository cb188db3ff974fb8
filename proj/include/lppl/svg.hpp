#pragma once

#include <span>
#include <string>

#include "lppl/indicator.hpp"
#include "lppl/timeseries.hpp"

namespace lppl {

// Static two-axis chart: log-scaled price line (left axis) with the pos
// indicator in red and the neg indicator in green on a [0, 1] right axis.
// Pure string generation, deterministic byte-for-byte.
std::string render_chart_svg(const PriceSeries& prices,
                             std::span<const IndicatorPoint> points,
                             const std::string& title);

} // namespace lppl
