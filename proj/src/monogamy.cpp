#include "harmony/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"

namespace harmony {

namespace {

void require_three_qubits(const DensityMatrix& rho, std::size_t pivot) {
    if (rho.n_qubits() != 3) {
        throw DimensionError("monogamy requires n_qubits=3, got n_qubits=" + std::to_string(rho.n_qubits()));
    }
    if (pivot > 2) throw InvalidSubset("pivot qubit must be 0, 1 or 2");
}

void require_pure(const DensityMatrix& rho, const Tolerances& tol) {
    const double p = purity(rho);
    if (p < 1.0 - tol.purity) {
        throw NotPure("state is not pure: tr(rho^2) = " + std::to_string(p) + " < 1 - " +
                      std::to_string(tol.purity));
    }
}

}  // namespace

std::array<std::size_t, 2> pivot_partners(std::size_t pivot) {
    switch (pivot) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        case 2: return {0, 1};
        default: throw InvalidSubset("pivot qubit must be 0, 1 or 2");
    }
}

MarginalHarmonies marginal_harmonies(const DensityMatrix& rho, std::size_t pivot, const Tolerances& tol) {
    require_three_qubits(rho, pivot);
    const auto [y, z] = pivot_partners(pivot);
    const std::array<std::size_t, 2> xy{pivot, y};
    const std::array<std::size_t, 2> xz{pivot, z};
    return {harmony(partial_trace(rho, xy), tol), harmony(partial_trace(rho, xz), tol)};
}

double harmony_x_yz(const DensityMatrix& rho, std::size_t pivot, const Tolerances& tol) {
    require_three_qubits(rho, pivot);
    require_pure(rho, tol);
    const std::array<std::size_t, 1> x{pivot};
    const double d = 4.0 * det(partial_trace(rho, x).matrix()).real();
    return d * d;
}

double sqrt_harmony_x_yz(std::span<const Complex> amplitudes, std::size_t pivot) {
    if (amplitudes.size() != 8) throw DimensionError("expected 3-qubit amplitudes");
    const std::size_t shift = 2 - pivot;
    double r00 = 0.0;
    double r11 = 0.0;
    Complex r01 = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        if ((i >> shift) & 1U) continue;
        const Complex a0 = amplitudes[i];
        const Complex a1 = amplitudes[i | (std::size_t{1} << shift)];
        r00 += std::norm(a0);
        r11 += std::norm(a1);
        r01 += a0 * std::conj(a1);
    }
    const double n2 = r00 + r11;
    if (n2 == 0.0) return 0.0;
    return std::max(0.0, 4.0 * (r00 * r11 - std::norm(r01)) / (n2 * n2));
}

double pure_monogamy_residual(const DensityMatrix& rho, std::size_t pivot, const Tolerances& tol) {
    const double h_x_yz = harmony_x_yz(rho, pivot, tol);
    const auto [h_xy, h_xz] = marginal_harmonies(rho, pivot, tol);
    return h_x_yz - h_xy - h_xz;
}

double mixed_corollary_check(const DensityMatrix& rho, std::size_t pivot, const Tolerances& tol) {
    const auto [h_xy, h_xz] = marginal_harmonies(rho, pivot, tol);
    return h_xy * h_xy + h_xz * h_xz;
}

std::vector<double> decomposition_bound_trace(const DensityMatrix& rho, std::size_t pivot,
                                              std::size_t n_decompositions, const RandomSpec& spec,
                                              std::size_t k_states, const Tolerances& tol) {
    require_three_qubits(rho, pivot);
    if (n_decompositions < 1) throw ConfigError("n_decompositions must be at least 1");

    const HermitianEigen eig = herm_eig(rho.matrix(), tol);
    const std::size_t rank = std::max<std::size_t>(1, rho.numerical_rank(tol.rank_floor));
    const std::size_t k = k_states == 0 ? 2 * rank : k_states;
    if (k < rank) {
        throw ConfigError("decomposition size K=" + std::to_string(k) + " must be at least rank " +
                          std::to_string(rank));
    }
    double kept = 0.0;
    for (std::size_t j = 0; j < rank; ++j) kept += eig.values[j];
    std::vector<double> root_mu(rank);
    for (std::size_t j = 0; j < rank; ++j) root_mu[j] = std::sqrt(eig.values[j] / kept);

    Rng rng(spec.seed, spec.stream, 1);
    std::vector<Complex> iso(k * rank);  // column-major K x rank
    std::vector<double> trace(n_decompositions);
    double best = std::numeric_limits<double>::infinity();
    std::array<Complex, 8> phi{};

    for (std::size_t s = 0; s < n_decompositions; ++s) {
        for (std::size_t j = 0; j < rank; ++j) {
            Complex* col = &iso[j * k];
            for (std::size_t i = 0; i < k; ++i) col[i] = rng.complex_normal();
            for (std::size_t prev = 0; prev < j; ++prev) {
                const Complex* pc = &iso[prev * k];
                Complex proj = 0.0;
                for (std::size_t i = 0; i < k; ++i) proj += std::conj(pc[i]) * col[i];
                for (std::size_t i = 0; i < k; ++i) col[i] -= proj * pc[i];
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < k; ++i) norm += std::norm(col[i]);
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < k; ++i) col[i] /= norm;
        }

        double value = 0.0;
        for (std::size_t row = 0; row < k; ++row) {
            phi.fill(0.0);
            for (std::size_t j = 0; j < rank; ++j) {
                const Complex w = iso[j * k + row] * root_mu[j];
                for (std::size_t a = 0; a < 8; ++a) phi[a] += w * eig.vectors(a, j);
            }
            double p = 0.0;
            for (Complex z : phi) p += std::norm(z);
            if (p > 0.0) value += p * sqrt_harmony_x_yz(phi, pivot);
        }
        best = std::min(best, value);
        trace[s] = best;
    }
    return trace;
}

double decomposition_min_upper_bound(const DensityMatrix& rho, std::size_t pivot,
                                     std::size_t n_decompositions, const RandomSpec& spec,
                                     std::size_t k_states, const Tolerances& tol) {
    return decomposition_bound_trace(rho, pivot, n_decompositions, spec, k_states, tol).back();
}

MonogamyReport monogamy_report(const DensityMatrix& rho, std::size_t pivot, std::string source,
                               std::optional<DecompositionSampling> sampling, const Tolerances& tol) {
    MonogamyReport r;
    r.pivot = pivot;
    r.source = std::move(source);
    const auto [h_xy, h_xz] = marginal_harmonies(rho, pivot, tol);
    r.h_xy = h_xy;
    r.h_xz = h_xz;
    r.corollary_lhs = h_xy * h_xy + h_xz * h_xz;
    if (purity(rho) >= 1.0 - tol.purity) {
        r.h_x_yz = harmony_x_yz(rho, pivot, tol);
        r.residual_pure = *r.h_x_yz - h_xy - h_xz;
    }
    if (sampling) {
        r.decomposition_bound =
            decomposition_min_upper_bound(rho, pivot, sampling->n_decompositions, sampling->spec, 0, tol);
    }
    return r;
}

}  // namespace harmony
