#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "harmony/states.hpp"

namespace harmony {

struct RouteTiming {
    std::string route;
    double mean_ns = 0.0;    ///< per state
    double median_ns = 0.0;
    double p95_ns = 0.0;
};

/// Timing of the three ways to decide entanglement on one batch of states:
/// polynomial harmony, concurrence from the general eigenvalues of rho*rho~,
/// and concurrence from the Hermitian R matrix.
struct BenchReport {
    std::size_t batch_size = 0;
    std::size_t repetitions = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string timestamp;  ///< UTC, ISO 8601
    std::array<RouteTiming, 3> routes{};
    std::size_t checked_states = 0;
    double correctness_max_discrepancy = 0.0;
    bool polynomial_faster = false;  ///< polynomial mean below eigenvalue-route mean
};

/// Generates the batch (untimed; state i from Rng(seed, stream, i), rank
/// uniform in 1..4), runs one discarded warm-up pass, then times each route
/// over the whole batch `repetitions` times. Per-state statistics come from
/// the per-repetition batch totals. Route agreement is checked on every
/// hundredth state. Throws ConfigError for batch_size < 1 or repetitions < 3.
BenchReport run_bench(std::size_t batch_size, const RandomSpec& spec, std::size_t repetitions);

}  // namespace harmony
