#include "harmony/rng.hpp"

#include <cmath>

namespace harmony {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    return std::seed_seq{static_cast<std::uint32_t>(seed),      static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(stream),    static_cast<std::uint32_t>(stream >> 32),
                         static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32)};
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
    auto seq = make_seed_seq(seed, stream, substream);
    engine_.seed(seq);
}

std::complex<double> Rng::complex_normal() {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re * M_SQRT1_2, im * M_SQRT1_2};
}

std::size_t Rng::index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

}  // namespace harmony
