#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lppl/model.hpp"
#include "lppl/timeseries.hpp"

namespace lppl {

// Schedule, optimizer, and constraint settings for the shrinking-window
// calibration. Defaults reproduce the 120-day initial window with a 5-day
// shrink, i.e. 24 windows per anchor.
struct PipelineConfig {
    int initial_window_days = 120;
    int shrink_step_days = 5;
    int min_window_days = 5;

    int starts_per_window = 10;     // independent simplex descents per window
    int max_optimizer_iters = 500;  // iteration cap per descent
    std::uint64_t rng_seed = 42;

    // Stylized-feature bounds on the nonlinear parameters.
    double m_min = 0.0;
    double m_max = 1.0;
    double omega_min = 2.0;
    double omega_max = 15.0;

    // Critical-time bound rule: tc is confined to
    //   [max(t2 - tc_cap_before, t2 - tc_window_frac*(t2-t1)),
    //    min(t2 + tc_cap_after,  t2 + tc_window_frac*(t2-t1))]
    // and additionally tc > t2 + tc_epsilon so every sample keeps t < tc.
    double tc_cap_before = 60.0;
    double tc_cap_after = 252.0;
    double tc_window_frac = 0.5;
    double tc_epsilon = 0.01;

    // Throws ConfigError when the schedule or bounds are inconsistent.
    void validate() const;

    // Number of windows enumerated per eligible anchor (24 with defaults).
    int windows_per_anchor() const;
};

// Effective tc search interval for one window, after the epsilon clamp.
struct TcBounds {
    double lo = 0.0;
    double hi = 0.0;

    bool feasible() const { return lo < hi; }
};

TcBounds tc_bounds(int t1, int t2, const PipelineConfig& config = {});

// Windows ending at t2 with lengths {initial, initial-step, ...} down to
// min_window_days, as (t1, t2) pairs. Empty when t2 has insufficient
// history for the initial window.
std::vector<std::pair<int, int>> enumerate_windows(int t2, const PipelineConfig& config = {});

// Accepted calibration of one window.
struct WindowFit {
    int t1 = 0;
    int t2 = 0;
    LpplParams params;
    double sse = 0.0;
    bool constraints_ok = false;
    int n_samples = 0;
};

// All accepted fits for one anchor date, in window (t1 ascending) order.
struct AnchorFits {
    int t2 = 0;
    std::vector<WindowFit> fits;
};

// Accepted fits for every eligible anchor, in anchor order.
struct FitTable {
    std::string asset_id;
    Date epoch;  // day 0 of the fitted LogSeries
    std::vector<AnchorFits> anchors;

    std::size_t total_fits() const;
};

// Multi-start simplex search over (tc, m, omega) with the OLS subproblem as
// the inner step. Returns the lowest-SSE start whose parameters satisfy all
// stylized-feature constraints, or nothing when no start ends feasible.
// Deterministic: the RNG stream is derived from (config.rng_seed, t2, t1).
std::optional<WindowFit> fit_window(const LogSeries& series, int t1, int t2,
                                    const PipelineConfig& config = {});

// fit_window over enumerate_windows(t2); failed windows are omitted.
std::vector<WindowFit> run_anchor(const LogSeries& series, int t2,
                                  const PipelineConfig& config = {});

// run_anchor for every t2 from initial_window_days-1 to the last index.
// `threads` <= 0 means one per hardware thread. Output is independent of
// the thread count. Throws DataError when the series is shorter than the
// initial window.
FitTable run_all(const LogSeries& series, const PipelineConfig& config = {},
                 int threads = 1);

} // namespace lppl
