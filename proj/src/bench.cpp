#include "harmony/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <numeric>
#include <vector>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/rng.hpp"
#include "harmony/verify.hpp"

namespace harmony {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double percentile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
    return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

// Total wall time in ns of fn over the batch; results feed a sink so the
// loop cannot be elided.
double time_batch(const std::vector<DensityMatrix>& batch, const std::function<double(const DensityMatrix&)>& fn,
                  double& sink) {
    const auto start = std::chrono::steady_clock::now();
    double acc = 0.0;
    for (const DensityMatrix& rho : batch) acc += fn(rho);
    const auto stop = std::chrono::steady_clock::now();
    sink += acc;
    return std::chrono::duration<double, std::nano>(stop - start).count();
}

}  // namespace

BenchReport run_bench(std::size_t batch_size, const RandomSpec& spec, std::size_t repetitions) {
    if (batch_size < 1) throw ConfigError("batch_size must be at least 1");
    if (repetitions < 3) throw ConfigError("repetitions must be at least 3");

    std::vector<DensityMatrix> batch;
    batch.reserve(batch_size);
    for (std::size_t i = 0; i < batch_size; ++i) {
        Rng rng(spec.seed, spec.stream, i);
        const std::size_t rank = 1 + rng.index(4);
        batch.push_back(random_mixed(2, rank, rng));
    }

    const std::array<std::pair<std::string, std::function<double(const DensityMatrix&)>>, 3> routes{{
        {"polynomial", [](const DensityMatrix& r) { return harmony(r); }},
        {"eigenvalue", [](const DensityMatrix& r) { return concurrence(lambda_spectrum(r)); }},
        {"hermitian", [](const DensityMatrix& r) { return concurrence(lambda_spectrum_hermitian(r)); }},
    }};

    BenchReport report;
    report.batch_size = batch_size;
    report.repetitions = repetitions;
    report.seed = spec.seed;
    report.stream = spec.stream;
    report.timestamp = utc_timestamp();

    double sink = 0.0;
    const double n = static_cast<double>(batch_size);
    for (std::size_t r = 0; r < routes.size(); ++r) {
        time_batch(batch, routes[r].second, sink);  // warm-up
        std::vector<double> per_state;
        for (std::size_t rep = 0; rep < repetitions; ++rep)
            per_state.push_back(time_batch(batch, routes[r].second, sink) / n);
        report.routes[r] = {routes[r].first,
                            std::accumulate(per_state.begin(), per_state.end(), 0.0) / static_cast<double>(repetitions),
                            percentile(per_state, 0.5), percentile(per_state, 0.95)};
    }
    if (!std::isfinite(sink)) throw Error("benchmark produced a non-finite result");

    for (std::size_t i = 0; i < batch_size; i += 100) {
        report.correctness_max_discrepancy =
            std::max(report.correctness_max_discrepancy, crosscheck_disharmony_routes(batch[i]));
        ++report.checked_states;
    }
    report.polynomial_faster = report.routes[0].mean_ns < report.routes[1].mean_ns;
    return report;
}

}  // namespace harmony
