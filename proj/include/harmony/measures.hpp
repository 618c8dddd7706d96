#pragma once

#include <array>

#include "harmony/qmat.hpp"
#include "harmony/states.hpp"
#include "harmony/tolerances.hpp"

namespace harmony {

/// The four square roots of the eigenvalues of rho * rho~, decreasing.
class LambdaSpectrum {
public:
    /// Accepts any order; sorts. Throws InvalidSpectrum for negative or
    /// non-finite entries or a sum above 1 + 1e-9.
    explicit LambdaSpectrum(std::array<double, 4> lambdas);

    const std::array<double, 4>& values() const { return lambdas_; }
    double operator[](std::size_t i) const { return lambdas_[i]; }
    double sum() const;

private:
    std::array<double, 4> lambdas_{};
};

struct HarmonyBounds {
    double lo;
    double hi;
};

struct MeasureReport {
    double harmony = 0.0;
    double disharmony = 0.0;
    double concurrence = 0.0;
    double eof = 0.0;       ///< nats
    double purity_a = 1.0;  ///< purity of the first qubit's marginal
    LambdaSpectrum lambda{{0.0, 0.0, 0.0, 0.0}};
    double route_discrepancy = 0.0;
    bool harmony_above_one = false;  ///< harmony in (1, 1 + tol] is reported unclipped
};

/// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
Matrix spin_flip(const DensityMatrix& rho);

/// -2 tr[(rho rho~)^2] + [tr(rho rho~)]^2 + 8 det(rho). Throws ImaginaryResidue
/// when the discarded imaginary part exceeds tol.imaginary_residue.
double disharmony_poly(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// max{0, -D(rho)} from the polynomial form.
double harmony(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// lambda spectrum from the general eigenvalues of rho * rho~.
LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// All four lambdas with no rank truncation, as the singular values of
/// A^dagger (sigma_y (x) sigma_y) A^* where rho = A A^dagger. Rounding noise in a
/// zero lambda stays at the level of machine epsilon instead of its square
/// root, which is what the eigenvalue routes would give.
std::array<double, 4> untruncated_lambdas(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// lambda spectrum as the eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)).
LambdaSpectrum lambda_spectrum_hermitian(const DensityMatrix& rho,
                                         const Tolerances& tol = default_tolerances);

double concurrence(const LambdaSpectrum& lam);
double concurrence(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// -x ln x - (1 - x) ln(1 - x), with 0 ln 0 = 0.
double binary_entropy(double x);

/// Closed form h((1 + sqrt(1 - C^2)) / 2) in nats.
double eof_from_concurrence(double c);
double entanglement_of_formation(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// tr(rho^2).
double purity(const DensityMatrix& rho);

/// -sum mu ln mu over the Hermitian eigenvalues, in nats.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

/// |<psi~|psi>|^4 with psi~ = (sigma_y (x) sigma_y) psi^*.
double pure_harmony(const PureState& psi);

/// Envelope of the harmony at fixed concurrence: (C^4, C(2+C)^3/27).
HarmonyBounds harmony_bounds(double c);

/// The four-factor product in the lambdas. When lambda_1 dominates, also
/// evaluates C(C+2l3+2l4)(C+2l4+2l2)(C+2l2+2l3) and throws InvalidSpectrum if
/// the two forms disagree by more than 1e-10.
double disharmony_from_spectrum(const LambdaSpectrum& lam);

/// Every measure of a 2-qubit state. route_discrepancy compares the
/// polynomial disharmony with the one from the general-eigenvalue spectrum.
MeasureReport measure_all(const DensityMatrix& rho, const Tolerances& tol = default_tolerances);

}  // namespace harmony
