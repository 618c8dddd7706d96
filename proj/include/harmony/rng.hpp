#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace harmony {

/// Reproducible random source for one (seed, stream) pair. Distinct streams
/// under the same seed are seeded through std::seed_seq and are treated as
/// independent; Monte Carlo campaigns give sample i its own stream i.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64/seed_seq(seed,stream)";

    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

    double uniform() { return uniform_(engine_); }
    double normal() { return normal_(engine_); }
    /// Complex standard normal: real and imaginary parts N(0, 1/2).
    std::complex<double> complex_normal();
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace harmony
