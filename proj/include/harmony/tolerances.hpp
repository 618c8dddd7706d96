#pragma once

namespace harmony {

/// Numerical thresholds shared by every module. The defaults are the values
/// the library is validated against; callers may loosen or tighten them.
struct Tolerances {
    double hermitian = 1e-9;          ///< relative Frobenius norm of m - m^dagger
    double psd_floor = 1e-9;          ///< eigenvalues in [-psd_floor, 0) are clamped to 0
    double trace = 1e-9;              ///< |tr(rho) - 1|
    double reconstruction = 1e-8;     ///< relative residual of square roots and eigendecompositions
    double imaginary_residue = 1e-9;  ///< discarded imaginary part of the disharmony polynomial
    double spectrum = 1e-8;           ///< imaginary/negative residue allowed on eigenvalues of rho*rho~
    double purity = 1e-9;             ///< tr(rho^2) >= 1 - purity means "pure"
    double normalization = 1e-10;     ///< | ||psi|| - 1 | for pure states
    double rank_floor = 1e-14;        ///< density-matrix eigenvalues at or below this count as zero
};

inline constexpr Tolerances default_tolerances{};

}  // namespace harmony
