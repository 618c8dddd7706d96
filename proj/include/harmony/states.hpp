#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "harmony/qmat.hpp"
#include "harmony/rng.hpp"
#include "harmony/tolerances.hpp"

namespace harmony {

/// Normalized amplitude vector over 1 to 3 qubits. Basis order is
/// |0...0>, ..., |1...1> with qubit 0 the leftmost (most significant) bit.
class PureState {
public:
    PureState(std::vector<Complex> amplitudes, const Tolerances& tol = default_tolerances);
    /// Normalizes a nonzero vector instead of rejecting it.
    static PureState normalized(std::vector<Complex> amplitudes);
    /// Computational basis state from a bit string such as "01".
    static PureState basis(std::string_view bits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

private:
    struct Unchecked {};
    PureState(std::vector<Complex> amplitudes, Unchecked);

    std::size_t n_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Hermitian, positive-semidefinite, unit-trace matrix over 1 to 3 qubits.
/// Construction validates; an invalid matrix is rejected, never repaired.
class DensityMatrix {
public:
    explicit DensityMatrix(const Matrix& m, const Tolerances& tol = default_tolerances);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return mat_.dim(); }
    const Matrix& matrix() const { return mat_; }
    Complex operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

    /// Hermitian eigenvalues, decreasing, computed during validation.
    std::span<const double> eigenvalues() const { return {eigenvalues_.data(), dim()}; }
    /// Number of eigenvalues above floor.
    std::size_t numerical_rank(double floor = default_tolerances.rank_floor) const;

private:
    std::size_t n_qubits_ = 0;
    Matrix mat_;
    std::array<double, Matrix::max_dim> eigenvalues_{};
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

enum class EnsembleKind { HaarPure, InducedMixed };

struct Ensemble {
    EnsembleKind kind = EnsembleKind::HaarPure;
    std::size_t rank = 1;  ///< ancilla dimension for InducedMixed
};

struct RandomSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    Ensemble ensemble{};
};

struct NonconvexityFamily {
    DensityMatrix rho_plus;
    DensityMatrix rho_minus;
    DensityMatrix mixture;
};

DensityMatrix from_pure(const PureState& psi);

PureState bell_state(BellKind kind);
/// Mixture sum_i p_i |Bell_i><Bell_i| in the order PhiPlus, PhiMinus, PsiPlus, PsiMinus.
DensityMatrix bell_diagonal(std::span<const double, 4> p);
PureState ghz_state();
PureState w_state();

/// rho_+- = (1 +- x)/2 |00><00| + sqrt(1 - x^2)/2 (|00><11| + |11><00|) + (1 -+ x)/2 |11><11|
/// and their equal mixture.
NonconvexityFamily nonconvexity_family(double x);

PureState random_pure(std::size_t n_qubits, const RandomSpec& spec);
/// Induced-measure mixed state: partial trace of a Haar pure state over a
/// rank-dimensional ancilla, sampled as G G^dagger / tr(G G^dagger) for a
/// 2^n x rank complex Ginibre matrix G.
DensityMatrix random_mixed(std::size_t n_qubits, std::size_t rank, const RandomSpec& spec);
/// Draws from an existing generator instead of a fresh (seed, stream).
PureState random_pure(std::size_t n_qubits, Rng& rng);
DensityMatrix random_mixed(std::size_t n_qubits, std::size_t rank, Rng& rng);
/// Haar-random 2x2 unitary.
Matrix random_unitary_2(Rng& rng);

/// Reduced state on the kept qubits, listed in increasing index order in the
/// result. keep must be a nonempty proper subset of the qubit indices.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

std::string to_string(BellKind kind);

}  // namespace harmony
