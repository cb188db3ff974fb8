#pragma once

#include <cstdint>
#include <string>

#include "lppl/model.hpp"
#include "lppl/timeseries.hpp"

namespace lppl {

// Recipe for a synthetic LPPL price series with known ground truth.
// Noise is additive on the log-price (multiplicative on the price).
struct SynthSpec {
    LpplParams params;
    int n_days = 0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    Date epoch = Date{18262};  // 2020-01-01
    std::string label = "synthetic";

    // Throws ConfigError unless params.tc > n_days - 1, n_days >= 2 and
    // noise_sigma >= 0.
    void validate() const;
};

// price[t] = exp(evaluate(params, t) + eps_t), eps_t ~ N(0, noise_sigma^2)
// from the seeded generator. Deterministic per spec.
PriceSeries generate(const SynthSpec& spec);

} // namespace lppl
