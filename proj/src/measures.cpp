#include "harmony/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "harmony/error.hpp"

namespace harmony {

namespace {

void require_two_qubits(const DensityMatrix& rho) {
    if (rho.n_qubits() != 2) {
        throw DimensionError("2-qubit measure requires n_qubits=2, got n_qubits=" +
                             std::to_string(rho.n_qubits()));
    }
}

const Matrix& yy() {
    static const Matrix m = kron(sigma_y(), sigma_y());
    return m;
}

}  // namespace

LambdaSpectrum::LambdaSpectrum(std::array<double, 4> lambdas) : lambdas_(lambdas) {
    for (double l : lambdas_) {
        if (!std::isfinite(l) || l < 0.0) throw InvalidSpectrum("lambda values must be finite and nonnegative");
    }
    std::sort(lambdas_.begin(), lambdas_.end(), std::greater<>());
    if (sum() > 1.0 + 1e-9) {
        throw InvalidSpectrum("lambda values sum to " + std::to_string(sum()) + ", above 1");
    }
}

double LambdaSpectrum::sum() const { return lambdas_[0] + lambdas_[1] + lambdas_[2] + lambdas_[3]; }

Matrix spin_flip(const DensityMatrix& rho) {
    require_two_qubits(rho);
    return yy() * rho.matrix().conjugate() * yy();
}

double disharmony_poly(const DensityMatrix& rho, const Tolerances& tol) {
    const Matrix prod = rho.matrix() * spin_flip(rho);
    const Complex t1 = trace_of_product(prod, prod);
    const Complex t2 = prod.trace();
    const Complex d = -2.0 * t1 + t2 * t2 + 8.0 * det(rho.matrix());
    if (std::abs(d.imag()) > tol.imaginary_residue) {
        throw ImaginaryResidue("disharmony polynomial has imaginary part " + std::to_string(d.imag()));
    }
    return d.real();
}

double harmony(const DensityMatrix& rho, const Tolerances& tol) {
    return std::max(0.0, -disharmony_poly(rho, tol));
}

LambdaSpectrum lambda_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
    const Matrix prod = rho.matrix() * spin_flip(rho);
    std::vector<Complex> eig = gen_eigvals(prod);
    // rho * rho~ has at most rank(rho) nonzero eigenvalues; the rest are
    // rounding noise that the square root would amplify to ~1e-8.
    std::sort(eig.begin(), eig.end(), [](Complex a, Complex b) { return std::abs(a) > std::abs(b); });
    const std::size_t rank = rho.numerical_rank(tol.rank_floor);
    std::array<double, 4> lam{};
    for (std::size_t i = 0; i < rank; ++i) {
        const Complex mu = eig[i];
        if (std::abs(mu.imag()) > tol.spectrum || mu.real() < -tol.spectrum) {
            throw SpectrumViolation("eigenvalue (" + std::to_string(mu.real()) + ", " +
                                    std::to_string(mu.imag()) + ") of rho*rho~ is not nonnegative");
        }
        lam[i] = mu.real() > 0.0 ? std::sqrt(mu.real()) : 0.0;
    }
    return LambdaSpectrum(lam);
}

std::array<double, 4> untruncated_lambdas(const DensityMatrix& rho, const Tolerances& tol) {
    // rho = A A^dagger with A = V sqrt(mu); the lambdas are the singular values
    // of M = A^dagger Y A^*, read off the Hermitian dilation [[0, M], [M^dagger, 0]].
    const HermitianEigen eig = herm_eig(rho.matrix(), tol);
    Matrix a(4);
    for (std::size_t j = 0; j < 4; ++j) {
        const double w = std::sqrt(std::max(0.0, eig.values[j]));
        for (std::size_t i = 0; i < 4; ++i) a(i, j) = w * eig.vectors(i, j);
    }
    const Matrix yy = kron(sigma_y(), sigma_y());
    const Matrix m = a.adjoint() * yy * a.conjugate();
    Matrix dilation(8);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            dilation(i, 4 + j) = m(i, j);
            dilation(4 + j, i) = std::conj(m(i, j));
        }
    }
    const std::vector<double> values = herm_eig(dilation, tol).values;
    std::array<double, 4> lam{};
    for (std::size_t i = 0; i < 4; ++i) lam[i] = std::max(0.0, values[i]);
    return lam;
}

LambdaSpectrum lambda_spectrum_hermitian(const DensityMatrix& rho, const Tolerances& tol) {
    const Matrix root = psd_sqrt(rho.matrix(), tol);
    const Matrix r = psd_sqrt(root * spin_flip(rho) * root, tol);
    const std::vector<double> values = herm_eig(r, tol).values;
    const std::size_t rank = rho.numerical_rank(tol.rank_floor);
    std::array<double, 4> lam{};
    for (std::size_t i = 0; i < rank; ++i) lam[i] = std::max(0.0, values[i]);
    return LambdaSpectrum(lam);
}

double concurrence(const LambdaSpectrum& lam) {
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double concurrence(const DensityMatrix& rho, const Tolerances& tol) {
    return concurrence(lambda_spectrum(rho, tol));
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange("binary entropy argument must lie in [0, 1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log(x);
    if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
    return h;
}

double eof_from_concurrence(double c) {
    if (!(c >= 0.0 && c <= 1.0 + 1e-12)) throw OutOfRange("concurrence must lie in [0, 1]");
    c = std::min(c, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const DensityMatrix& rho, const Tolerances& tol) {
    return eof_from_concurrence(concurrence(rho, tol));
}

double purity(const DensityMatrix& rho) {
    return trace_of_product(rho.matrix(), rho.matrix()).real();
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
    double s = 0.0;
    for (double mu : herm_eig(rho.matrix(), tol).values)
        if (mu > 0.0) s -= mu * std::log(mu);
    return s;
}

double pure_harmony(const PureState& psi) {
    if (psi.n_qubits() != 2) throw DimensionError("2-qubit measure requires n_qubits=2");
    const std::array<Complex, 4> flipped{-std::conj(psi[3]), std::conj(psi[2]), std::conj(psi[1]),
                                         -std::conj(psi[0])};
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(flipped[i]) * psi[i];
    const double o2 = std::norm(overlap);
    return o2 * o2;
}

HarmonyBounds harmony_bounds(double c) {
    if (!(c >= 0.0 && c <= 1.0)) throw OutOfRange("concurrence must lie in [0, 1]");
    const double c2 = c * c;
    return {c2 * c2, c * std::pow(2.0 + c, 3) / 27.0};
}

double disharmony_from_spectrum(const LambdaSpectrum& lam) {
    const auto& l = lam.values();
    const double total = lam.sum();
    double d = 1.0;
    for (double li : l) d *= total - 2.0 * li;

    const double c = l[0] - l[1] - l[2] - l[3];
    if (c >= 0.0) {
        const double h = c * (c + 2 * l[2] + 2 * l[3]) * (c + 2 * l[3] + 2 * l[1]) * (c + 2 * l[1] + 2 * l[2]);
        if (std::abs(h + d) > 1e-10) {
            throw InvalidSpectrum("factorized harmony disagrees with the four-factor product by " +
                                  std::to_string(std::abs(h + d)));
        }
    }
    return d;
}

MeasureReport measure_all(const DensityMatrix& rho, const Tolerances& tol) {
    require_two_qubits(rho);
    MeasureReport r;
    r.disharmony = disharmony_poly(rho, tol);
    r.harmony = std::max(0.0, -r.disharmony);
    r.harmony_above_one = r.harmony > 1.0;
    r.lambda = lambda_spectrum(rho, tol);
    r.concurrence = concurrence(r.lambda);
    r.eof = eof_from_concurrence(r.concurrence);
    constexpr std::array<std::size_t, 1> first{0};
    r.purity_a = purity(partial_trace(rho, first));
    r.route_discrepancy = std::abs(r.disharmony - disharmony_from_spectrum(r.lambda));
    return r;
}

}  // namespace harmony
