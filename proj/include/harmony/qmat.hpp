#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "harmony/tolerances.hpp"

namespace harmony {

using Complex = std::complex<double>;

/// Square complex matrix of dimension 2, 4 or 8 stored row-major in a fixed
/// buffer, so matrices are cheap to copy and never allocate.
class Matrix {
public:
    static constexpr std::size_t max_dim = 8;

    Matrix() = default;
    /// Zero matrix. Throws DimensionError unless dim is 2, 4 or 8.
    explicit Matrix(std::size_t dim);
    /// Row-major entries; the list length must be a valid dim squared.
    Matrix(std::size_t dim, std::initializer_list<Complex> entries);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const Complex> diag);
    static Matrix diagonal(std::span<const double> diag);
    /// Outer product |a><b|.
    static Matrix outer(std::span<const Complex> a, std::span<const Complex> b);

    std::size_t dim() const { return dim_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(Complex s);

    Matrix adjoint() const;
    Matrix conjugate() const;
    Matrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool is_finite() const;

    /// Applies the matrix to a column vector of length dim.
    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    std::size_t dim_ = 0;
    std::array<Complex, max_dim * max_dim> data_{};
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, Matrix m);
Matrix operator*(Matrix m, Complex s);

/// tr(a * b) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

/// Determinant by LU factorization with partial pivoting.
Complex det(const Matrix& m);

/// All eigenvalues of a general complex matrix, with multiplicity and in no
/// particular order. Householder reduction to Hessenberg form followed by
/// Wilkinson-shifted QR; throws NonConvergence after 100*dim QR sweeps.
std::vector<Complex> gen_eigvals(const Matrix& m);

struct HermitianEigen {
    std::vector<double> values;  ///< decreasing
    Matrix vectors;              ///< orthonormal eigenvectors as columns
};

/// Eigendecomposition of a Hermitian matrix (cyclic complex Jacobi).
/// Throws NotHermitian when ||m - m^dagger||_F > tol.hermitian * max(1, ||m||_F).
HermitianEigen herm_eig(const Matrix& m, const Tolerances& tol = default_tolerances);

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues in [-tol.psd_floor, 0) are clamped to zero; anything lower
/// throws NotPSD.
Matrix psd_sqrt(const Matrix& m, const Tolerances& tol = default_tolerances);

/// Kronecker product a (x) b with a's index most significant. Throws
/// DimensionError when the result would exceed 8x8.
Matrix kron(const Matrix& a, const Matrix& b);

/// Pauli matrices.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

/// Relative Hermiticity defect ||m - m^dagger||_F / max(1, ||m||_F).
double hermiticity_defect(const Matrix& m);

}  // namespace harmony
