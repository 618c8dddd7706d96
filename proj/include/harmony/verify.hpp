#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "harmony/qmat.hpp"
#include "harmony/states.hpp"
#include "harmony/tolerances.hpp"

namespace harmony {

/// Settings of the randomized search over pure-state decompositions.
///
/// One iteration is a sweep that proposes one random two-row rotation for
/// every pair of rows of the K x rank isometry; improving proposals are kept.
/// The rotation angle is drawn from [-step, step] and step shrinks by
/// step_decay after each sweep. A restart ends after max_iters sweeps or once
/// step falls below min_step. Restart r draws from Rng(seed, stream, r + 1).
struct DecompositionSearchConfig {
    std::size_t k_states = 8;
    std::size_t restarts = 20;
    std::size_t max_iters = 2000;
    double initial_step = M_PI / 8.0;
    double step_decay = 0.95;
    double min_step = 1e-7;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

struct RouteValues {
    double poly;       ///< -2 tr[(rho rho~)^2] + [tr(rho rho~)]^2 + 8 det(rho)
    double spectrum;   ///< four-factor product on the general-eigenvalue lambdas
    double hermitian;  ///< four-factor product on the eigenvalues of R
    double max_discrepancy() const;
};

struct VerificationReport {
    double closed_form_eof = 0.0;
    double searched_eof = 0.0;
    double gap = 0.0;  ///< searched - closed form
    std::size_t rank = 0;
    RouteValues routes{};
    std::vector<double> restart_trace;  ///< best objective of each restart
    double max_reconstruction_error = 0.0;
};

/// Minimizes sum_k p_k S(tr_B |phi_k><phi_k|) over decompositions of a
/// 2-qubit rho. Candidates are phi~_k = sum_j V_kj sqrt(mu_j) e_j from the
/// eigendecomposition rho = sum_j mu_j e_j e_j^dagger and a K x rank isometry V.
/// Throws ConfigError when K < rank or the schedule is degenerate.
VerificationReport eof_decomposition_search(const DensityMatrix& rho, const DecompositionSearchConfig& cfg,
                                            const Tolerances& tol = default_tolerances);

/// Disharmony by the polynomial, general-eigenvalue and Hermitian-R routes.
RouteValues disharmony_routes(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// Largest pairwise disagreement among the three routes.
double crosscheck_disharmony_routes(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

struct NonmonotonicityRow {
    double x;
    double h_mixture;
    double h_plus;
    double h_minus;
    double gap;  ///< H(mixture) - H(rho_+)/2 - H(rho_-)/2
};

std::vector<NonmonotonicityRow> reproduce_nonmonotonicity(std::span<const double> xs,
                                                          const Tolerances& tol = default_tolerances);

/// |H((U_A (x) U_B) rho (U_A (x) U_B)^dagger) - H(rho)|.
double local_unitary_deviation(const DensityMatrix& rho, const Matrix& u_a, const Matrix& u_b,
                               const Tolerances& tol = default_tolerances);

/// Max deviation over n random (mixed rho, Haar U_A, Haar U_B) triples.
/// Sample i draws from (spec.seed, spec.stream, i); rank is uniform in 1..4.
double local_unitary_sweep(std::size_t n, const RandomSpec& spec, const Tolerances& tol = default_tolerances);

}  // namespace harmony
