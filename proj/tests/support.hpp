#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "harmony/qmat.hpp"
#include "harmony/rng.hpp"
#include "harmony/states.hpp"

namespace harmony::test {

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
    Eigen::MatrixXcd e(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) e(r, c) = m(r, c);
    return e;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double d = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
    return d;
}

inline Matrix random_matrix(std::size_t dim, Rng& rng) {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = rng.complex_normal();
    return m;
}

inline Matrix random_hermitian(std::size_t dim, Rng& rng) {
    const Matrix g = random_matrix(dim, rng);
    return Complex(0.5) * (g + g.adjoint());
}

/// Oracle: eigenvalues of rho * rho~ by Eigen's general complex solver, with
/// the spin flip built from explicit Pauli matrices.
inline std::vector<double> oracle_lambdas(const Matrix& rho) {
    Eigen::Matrix2cd sy;
    sy << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
    Eigen::Matrix4cd yy;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) yy(2 * i + k, 2 * j + l) = sy(i, j) * sy(k, l);
    const Eigen::Matrix4cd r = to_eigen(rho);
    const Eigen::Matrix4cd flipped = yy * r.conjugate() * yy;
    const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r * flipped);
    std::vector<double> lam;
    for (int i = 0; i < 4; ++i) lam.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return lam;
}

inline DensityMatrix rho_of(BellKind k) { return from_pure(bell_state(k)); }

inline DensityMatrix basis_rho(std::string_view bits) { return from_pure(PureState::basis(bits)); }

inline DensityMatrix maximally_mixed(std::size_t dim) {
    return DensityMatrix(Complex(1.0 / static_cast<double>(dim)) * Matrix::identity(dim));
}

}  // namespace harmony::test
