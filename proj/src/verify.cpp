#include "harmony/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/rng.hpp"

namespace harmony {

namespace {

using Amplitudes = std::array<Complex, 4>;

// p * S(rho_A) for the unnormalized 2-qubit vector v, with p = <v|v>.
double weighted_subsystem_entropy(const Amplitudes& v) {
    const double a = std::norm(v[0]) + std::norm(v[1]);
    const double d = std::norm(v[2]) + std::norm(v[3]);
    const Complex b = v[0] * std::conj(v[2]) + v[1] * std::conj(v[3]);
    const double p = a + d;
    if (p <= 1e-300) return 0.0;
    const double disc = std::sqrt(std::max(0.0, (a - d) * (a - d) + 4.0 * std::norm(b)));
    const double hi = 0.5 * (p + disc) / p;
    const double lo = std::max(0.0, 0.5 * (p - disc) / p);
    double s = 0.0;
    if (hi > 0.0) s -= hi * std::log(hi);
    if (lo > 0.0) s -= lo * std::log(lo);
    return p * s;
}

double reconstruction_error(const std::vector<Amplitudes>& rows, const Matrix& target) {
    Matrix sum(4);
    for (const Amplitudes& v : rows)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) sum(r, c) += v[r] * std::conj(v[c]);
    double err = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) err = std::max(err, std::abs(sum(r, c) - target(r, c)));
    return err;
}

}  // namespace

double RouteValues::max_discrepancy() const {
    return std::max({std::abs(poly - spectrum), std::abs(poly - hermitian), std::abs(spectrum - hermitian)});
}

VerificationReport eof_decomposition_search(const DensityMatrix& rho, const DecompositionSearchConfig& cfg,
                                            const Tolerances& tol) {
    if (rho.n_qubits() != 2) throw DimensionError("2-qubit measure requires n_qubits=2");
    if (cfg.restarts < 1) throw ConfigError("restarts must be at least 1");
    if (cfg.max_iters < 1) throw ConfigError("max_iters must be at least 1");
    if (!(cfg.initial_step > 0.0) || !(cfg.step_decay > 0.0 && cfg.step_decay <= 1.0)) {
        throw ConfigError("step schedule needs initial_step > 0 and step_decay in (0, 1]");
    }

    const HermitianEigen eig = herm_eig(rho.matrix(), tol);
    const std::size_t rank = std::max<std::size_t>(1, rho.numerical_rank(tol.rank_floor));
    const std::size_t k = cfg.k_states;
    if (k < rank) {
        throw ConfigError("decomposition size K=" + std::to_string(k) + " must be at least the state rank " +
                          std::to_string(rank) + " (K >= rank)");
    }

    // Columns sqrt(mu_j) e_j, with the kept eigenvalues renormalized to sum to 1.
    double kept = 0.0;
    for (std::size_t j = 0; j < rank; ++j) kept += eig.values[j];
    std::vector<Amplitudes> weighted(rank);
    for (std::size_t j = 0; j < rank; ++j) {
        const double w = std::sqrt(std::max(0.0, eig.values[j]) / kept);
        for (std::size_t a = 0; a < 4; ++a) weighted[j][a] = w * eig.vectors(a, j);
    }
    Matrix target(4);
    for (const Amplitudes& v : weighted)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) target(r, c) += v[r] * std::conj(v[c]);

    VerificationReport report;
    report.rank = rank;
    report.closed_form_eof = entanglement_of_formation(rho, tol);
    report.routes = disharmony_routes(rho, tol);
    report.max_reconstruction_error = 0.0;
    double best = std::numeric_limits<double>::infinity();

    std::vector<Amplitudes> rows(k);
    std::vector<double> contrib(k);
    std::vector<std::vector<Complex>> iso(rank, std::vector<Complex>(k));

    for (std::size_t restart = 0; restart < cfg.restarts; ++restart) {
        Rng rng(cfg.seed, cfg.stream, restart + 1);

        // Haar isometry by Gram-Schmidt on Gaussian columns.
        for (std::size_t j = 0; j < rank; ++j) {
            for (std::size_t i = 0; i < k; ++i) iso[j][i] = rng.complex_normal();
            for (std::size_t prev = 0; prev < j; ++prev) {
                Complex proj = 0.0;
                for (std::size_t i = 0; i < k; ++i) proj += std::conj(iso[prev][i]) * iso[j][i];
                for (std::size_t i = 0; i < k; ++i) iso[j][i] -= proj * iso[prev][i];
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < k; ++i) norm += std::norm(iso[j][i]);
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < k; ++i) iso[j][i] /= norm;
        }
        for (std::size_t i = 0; i < k; ++i) {
            rows[i].fill(0.0);
            for (std::size_t j = 0; j < rank; ++j)
                for (std::size_t a = 0; a < 4; ++a) rows[i][a] += iso[j][i] * weighted[j][a];
            contrib[i] = weighted_subsystem_entropy(rows[i]);
        }
        double objective = 0.0;
        for (double c : contrib) objective += c;

        double step = cfg.initial_step;
        for (std::size_t sweep = 0; sweep < cfg.max_iters && step >= cfg.min_step; ++sweep) {
            for (std::size_t a = 0; a + 1 < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b) {
                    const double theta = step * (2.0 * rng.uniform() - 1.0);
                    const double phase = 2.0 * M_PI * rng.uniform();
                    const double c = std::cos(theta);
                    const Complex s = std::sin(theta) * std::polar(1.0, phase);
                    Amplitudes ra{};
                    Amplitudes rb{};
                    for (std::size_t q = 0; q < 4; ++q) {
                        ra[q] = c * rows[a][q] - s * rows[b][q];
                        rb[q] = std::conj(s) * rows[a][q] + c * rows[b][q];
                    }
                    const double ca = weighted_subsystem_entropy(ra);
                    const double cb = weighted_subsystem_entropy(rb);
                    const double delta = ca + cb - contrib[a] - contrib[b];
                    if (delta < 0.0) {
                        rows[a] = ra;
                        rows[b] = rb;
                        contrib[a] = ca;
                        contrib[b] = cb;
                        objective += delta;
                    }
                }
            }
            step *= cfg.step_decay;
            const double err = reconstruction_error(rows, target);
            report.max_reconstruction_error = std::max(report.max_reconstruction_error, err);
            if (err > 1e-9) {
                throw Error("decomposition drifted from rho by " + std::to_string(err));
            }
        }
        // Re-sum to shed the accumulated rounding of the incremental updates.
        objective = 0.0;
        for (const Amplitudes& v : rows) objective += weighted_subsystem_entropy(v);
        report.restart_trace.push_back(objective);
        best = std::min(best, objective);
    }
    report.searched_eof = best;
    report.gap = best - report.closed_form_eof;
    return report;
}

RouteValues disharmony_routes(const DensityMatrix& rho, const Tolerances& tol) {
    return {disharmony_poly(rho, tol), disharmony_from_spectrum(lambda_spectrum(rho, tol)),
            disharmony_from_spectrum(lambda_spectrum_hermitian(rho, tol))};
}

double crosscheck_disharmony_routes(const DensityMatrix& rho, const Tolerances& tol) {
    return disharmony_routes(rho, tol).max_discrepancy();
}

std::vector<NonmonotonicityRow> reproduce_nonmonotonicity(std::span<const double> xs, const Tolerances& tol) {
    std::vector<NonmonotonicityRow> rows;
    rows.reserve(xs.size());
    for (double x : xs) {
        const NonconvexityFamily f = nonconvexity_family(x);
        const double hm = harmony(f.mixture, tol);
        const double hp = harmony(f.rho_plus, tol);
        const double hn = harmony(f.rho_minus, tol);
        rows.push_back({x, hm, hp, hn, hm - 0.5 * hp - 0.5 * hn});
    }
    return rows;
}

double local_unitary_deviation(const DensityMatrix& rho, const Matrix& u_a, const Matrix& u_b,
                               const Tolerances& tol) {
    const Matrix u = kron(u_a, u_b);
    const Matrix rotated = u * rho.matrix() * u.adjoint();
    return std::abs(harmony(DensityMatrix(rotated, tol), tol) - harmony(rho, tol));
}

double local_unitary_sweep(std::size_t n, const RandomSpec& spec, const Tolerances& tol) {
    if (n < 1) throw ConfigError("local unitary sweep needs n >= 1");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(spec.seed, spec.stream, i);
        const std::size_t rank = 1 + rng.index(4);
        const DensityMatrix rho = random_mixed(2, rank, rng);
        const Matrix u_a = random_unitary_2(rng);
        const Matrix u_b = random_unitary_2(rng);
        worst = std::max(worst, local_unitary_deviation(rho, u_a, u_b, tol));
    }
    return worst;
}

}  // namespace harmony
