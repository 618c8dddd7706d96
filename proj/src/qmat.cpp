#include "harmony/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "harmony/error.hpp"

namespace harmony {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

bool valid_dim(std::size_t dim) { return dim == 2 || dim == 4 || dim == 8; }

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim) {
    if (!valid_dim(dim)) {
        throw DimensionError("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

Matrix::Matrix(std::size_t dim, std::initializer_list<Complex> entries) : Matrix(dim) {
    if (entries.size() != dim * dim) {
        throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                             std::to_string(entries.size()));
    }
    std::copy(entries.begin(), entries.end(), data_.begin());
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw DimensionError("outer product of vectors with different lengths");
    Matrix m(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * std::conj(b[c]);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (o.dim_ != dim_) throw DimensionError("dimension mismatch in addition");
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (o.dim_ != dim_) throw DimensionError("dimension mismatch in subtraction");
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= s;
    return *this;
}

Matrix Matrix::adjoint() const {
    Matrix m(*this);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(*this);
    for (std::size_t i = 0; i < dim_ * dim_; ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(*this);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(r, c) = (*this)(c, r);
    return m;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_ * dim_; ++i) s += std::norm(data_[i]);
    return std::sqrt(s);
}

bool Matrix::is_finite() const {
    return std::all_of(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(dim_ * dim_),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::vector<Complex> Matrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) throw DimensionError("vector length does not match matrix dimension");
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex s = 0.0;
        for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }
Matrix operator*(Matrix m, Complex s) { return m *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in multiplication");
    const std::size_t n = a.dim();
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
        }
    return m;
}

Complex trace_of_product(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("dimension mismatch in trace of product");
    Complex t = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(r, k) * b(k, r);
    return t;
}

Complex det(const Matrix& m) {
    Matrix lu = m;
    const std::size_t n = lu.dim();
    Complex d = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
        if (lu(pivot, k) == Complex(0.0)) return 0.0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
            d = -d;
        }
        d *= lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex f = lu(r, k) / lu(k, k);
            for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
        }
    }
    return d;
}

namespace {

void reduce_to_hessenberg(Matrix& h) {
    const std::size_t n = h.dim();
    std::array<Complex, Matrix::max_dim> v{};
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;
        const Complex x0 = h(k + 1, k);
        const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
        const Complex alpha = -phase * xnorm;

        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k) - (i == k + 1 ? alpha : Complex(0.0));
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 == 0.0) continue;
        const double vnorm = std::sqrt(vnorm2);
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

        // H <- (I - 2vv^H) H
        for (std::size_t c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h(i, c);
            for (std::size_t i = k + 1; i < n; ++i) h(i, c) -= 2.0 * v[i] * s;
        }
        // H <- H (I - 2vv^H)
        for (std::size_t r = 0; r < n; ++r) {
            Complex s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += h(r, i) * v[i];
            for (std::size_t i = k + 1; i < n; ++i) h(r, i) -= 2.0 * s * std::conj(v[i]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

struct Givens {
    double c;
    Complex s;
};

// [c s; -conj(s) c] maps (a, b) to (r, 0).
Givens make_givens(Complex a, Complex b) {
    if (b == Complex(0.0)) return {1.0, 0.0};
    if (a == Complex(0.0)) return {0.0, std::conj(b) / std::abs(b)};
    const double abs_a = std::abs(a);
    const double norm = std::hypot(abs_a, std::abs(b));
    return {abs_a / norm, (a / abs_a) * std::conj(b) / norm};
}

Complex wilkinson_shift(const Matrix& h, std::size_t hi) {
    const Complex a = h(hi - 1, hi - 1);
    const Complex b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1);
    const Complex d = h(hi, hi);
    const Complex p = 0.5 * (a - d);
    const Complex disc = std::sqrt(p * p + b * c);
    const Complex den = std::abs(p + disc) >= std::abs(p - disc) ? p + disc : p - disc;
    if (den == Complex(0.0)) return d;
    return d - b * c / den;
}

}  // namespace

std::vector<Complex> gen_eigvals(const Matrix& m) {
    const std::size_t n = m.dim();
    Matrix h = m;
    reduce_to_hessenberg(h);

    const double norm = h.frobenius_norm();
    std::vector<Complex> eig(n);
    if (norm == 0.0) return eig;

    const std::size_t max_sweeps = 100 * n;
    std::size_t sweeps = 0;
    std::size_t since_deflation = 0;
    std::array<Givens, Matrix::max_dim> rot{};

    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
    while (hi >= 0) {
        const auto uhi = static_cast<std::size_t>(hi);
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        std::size_t lo = uhi;
        while (lo > 0) {
            const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
            const double sub = std::abs(h(lo, lo - 1));
            if (sub <= eps * scale || sub <= eps * eps * norm) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == uhi) {
            eig[uhi] = h(uhi, uhi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++sweeps > max_sweeps) {
            throw NonConvergence("shifted QR did not converge within " + std::to_string(max_sweeps) +
                                 " sweeps");
        }
        ++since_deflation;

        Complex mu = wilkinson_shift(h, uhi);
        if (since_deflation % 10 == 0) {
            mu = h(uhi, uhi) + 0.75 * std::abs(h(uhi, uhi - 1));
        }

        for (std::size_t k = lo; k <= uhi; ++k) h(k, k) -= mu;
        for (std::size_t k = lo; k < uhi; ++k) {
            rot[k] = make_givens(h(k, k), h(k + 1, k));
            const auto [c, s] = rot[k];
            for (std::size_t col = k; col <= uhi; ++col) {
                const Complex x = h(k, col);
                const Complex y = h(k + 1, col);
                h(k, col) = c * x + s * y;
                h(k + 1, col) = -std::conj(s) * x + c * y;
            }
            h(k + 1, k) = 0.0;
        }
        for (std::size_t k = lo; k < uhi; ++k) {
            const auto [c, s] = rot[k];
            for (std::size_t row = lo; row <= k + 1; ++row) {
                const Complex x = h(row, k);
                const Complex y = h(row, k + 1);
                h(row, k) = c * x + std::conj(s) * y;
                h(row, k + 1) = -s * x + c * y;
            }
        }
        for (std::size_t k = lo; k <= uhi; ++k) h(k, k) += mu;
    }
    return eig;
}

double hermiticity_defect(const Matrix& m) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) s += std::norm(m(r, c) - std::conj(m(c, r)));
    return std::sqrt(s) / std::max(1.0, m.frobenius_norm());
}

HermitianEigen herm_eig(const Matrix& m, const Tolerances& tol) {
    const double defect = hermiticity_defect(m);
    if (defect > tol.hermitian) {
        throw NotHermitian("matrix is not Hermitian: relative defect " + std::to_string(defect) +
                           " exceeds " + std::to_string(tol.hermitian));
    }
    const std::size_t n = m.dim();
    // Work on the exactly Hermitian part.
    Matrix a(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    Matrix v = Matrix::identity(n);

    const double norm2 = std::max(std::norm(a.frobenius_norm()), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (off <= 1e-34 * norm2) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double abs_pq = std::abs(apq);
                if (abs_pq == 0.0) continue;
                const Complex phase = apq / abs_pq;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_pq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // Column block of the rotation G acting on (p, q).
                const Complex gpp = c;
                const Complex gpq = s;
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);

                for (std::size_t r = 0; r < n; ++r) {
                    const Complex x = a(r, p);
                    const Complex y = a(r, q);
                    a(r, p) = x * gpp + y * gqp;
                    a(r, q) = x * gpq + y * gqq;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const Complex x = a(p, col);
                    const Complex y = a(q, col);
                    a(p, col) = std::conj(gpp) * x + std::conj(gqp) * y;
                    a(q, col) = std::conj(gpq) * x + std::conj(gqq) * y;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex x = v(r, p);
                    const Complex y = v(r, q);
                    v(r, p) = x * gpp + y * gqp;
                    v(r, q) = x * gpq + y * gqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigen out{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

Matrix psd_sqrt(const Matrix& m, const Tolerances& tol) {
    const HermitianEigen e = herm_eig(m, tol);
    const std::size_t n = m.dim();
    const double floor = -tol.psd_floor * std::max(1.0, m.frobenius_norm());
    Matrix s(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double mu = e.values[k];
        if (mu < floor) {
            throw NotPSD("eigenvalue " + std::to_string(mu) + " is below the PSD floor " +
                         std::to_string(floor));
        }
        const double root = mu > 0.0 ? std::sqrt(mu) : 0.0;
        if (root == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = root * e.vectors(r, k);
            for (std::size_t c = 0; c < n; ++c) s(r, c) += vr * std::conj(e.vectors(c, k));
        }
    }
    return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.dim() * b.dim();
    if (n > Matrix::max_dim) {
        throw DimensionError("Kronecker product of dimension " + std::to_string(n) +
                             " exceeds the supported maximum of 8");
    }
    Matrix m(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                for (std::size_t l = 0; l < b.dim(); ++l)
                    m(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    return m;
}

Matrix sigma_x() { return Matrix(2, {0.0, 1.0, 1.0, 0.0}); }
Matrix sigma_y() { return Matrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }
Matrix sigma_z() { return Matrix(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace harmony
