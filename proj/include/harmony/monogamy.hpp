#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "harmony/states.hpp"
#include "harmony/tolerances.hpp"

namespace harmony {

/// Harmonies of the two 2-qubit marginals that contain the pivot X.
/// Y and Z are the other two qubits in increasing index order.
struct MarginalHarmonies {
    double h_xy;
    double h_xz;
};

struct MonogamyReport {
    std::size_t pivot = 0;
    double h_xy = 0.0;
    double h_xz = 0.0;
    std::optional<double> h_x_yz;         ///< pure inputs only
    std::optional<double> residual_pure;  ///< h_x_yz - h_xy - h_xz, pure inputs only
    double corollary_lhs = 0.0;           ///< h_xy^2 + h_xz^2
    std::optional<double> decomposition_bound;
    std::string source;
};

/// The other two qubits, increasing.
std::array<std::size_t, 2> pivot_partners(std::size_t pivot);

MarginalHarmonies marginal_harmonies(const DensityMatrix& rho, std::size_t pivot,
                                     const Tolerances& tol = default_tolerances);

/// (4 det rho_X)^2 for a pure 3-qubit state; NotPure when tr(rho^2) < 1 - tol.purity.
double harmony_x_yz(const DensityMatrix& rho, std::size_t pivot, const Tolerances& tol = default_tolerances);

/// Same quantity directly from amplitudes (need not be normalized; the
/// result is for the normalized state). Returns 4 det rho_X, i.e. sqrt(H_X(YZ)).
double sqrt_harmony_x_yz(std::span<const Complex> amplitudes, std::size_t pivot);

/// H_X(YZ) - H_XY - H_XZ for a pure state.
double pure_monogamy_residual(const DensityMatrix& rho, std::size_t pivot,
                              const Tolerances& tol = default_tolerances);

/// H_XY^2 + H_XZ^2; bounded by the decomposition minimum of sqrt(H_X(YZ)) and hence by 1.
double mixed_corollary_check(const DensityMatrix& rho, std::size_t pivot,
                             const Tolerances& tol = default_tolerances);

/// Running minimum of sum_k p_k sqrt(H_X(YZ),k) over n random pure-state
/// decompositions: entry i is the bound after i + 1 samples. Decompositions
/// come from V * diag(sqrt(mu)) applied to the eigenvectors of rho, with V a
/// Haar-random K x rank isometry drawn in sequence from Rng(seed, stream, 1),
/// so a longer run extends a shorter one. k_states = 0 selects K = 2 * rank.
std::vector<double> decomposition_bound_trace(const DensityMatrix& rho, std::size_t pivot,
                                              std::size_t n_decompositions, const RandomSpec& spec,
                                              std::size_t k_states = 0,
                                              const Tolerances& tol = default_tolerances);

/// Final entry of decomposition_bound_trace: an upper bound on the minimum.
double decomposition_min_upper_bound(const DensityMatrix& rho, std::size_t pivot,
                                     std::size_t n_decompositions, const RandomSpec& spec,
                                     std::size_t k_states = 0,
                                     const Tolerances& tol = default_tolerances);

struct DecompositionSampling {
    std::size_t n_decompositions;
    RandomSpec spec;
};

MonogamyReport monogamy_report(const DensityMatrix& rho, std::size_t pivot, std::string source,
                               std::optional<DecompositionSampling> sampling = std::nullopt,
                               const Tolerances& tol = default_tolerances);

}  // namespace harmony
