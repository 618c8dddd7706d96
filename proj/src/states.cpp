#include "harmony/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "harmony/error.hpp"

namespace harmony {

namespace {

std::size_t qubits_for_dim(std::size_t dim) {
    switch (dim) {
        case 2: return 1;
        case 4: return 2;
        case 8: return 3;
        default:
            throw DimensionError("state dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (Complex z : v) s += std::norm(z);
    return s;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, Unchecked)
    : n_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {}

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : PureState(std::move(amplitudes), Unchecked{}) {
    for (Complex z : amplitudes_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ValidationError("pure state has a non-finite amplitude");
    }
    const double norm = std::sqrt(squared_norm(amplitudes_));
    if (std::abs(norm - 1.0) > tol.normalization) {
        throw ValidationError("pure state norm " + fmt(norm) + " differs from 1 by more than " +
                              fmt(tol.normalization));
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("cannot normalize a zero vector");
    for (Complex& z : amplitudes) z /= norm;
    return PureState(std::move(amplitudes), Unchecked{});
}

PureState PureState::basis(std::string_view bits) {
    if (bits.empty() || bits.size() > 3) throw ValidationError("basis label must have 1 to 3 bits");
    std::size_t index = 0;
    for (char b : bits) {
        if (b != '0' && b != '1') throw ValidationError("basis label must contain only 0 and 1");
        index = (index << 1) | static_cast<std::size_t>(b - '0');
    }
    std::vector<Complex> amps(std::size_t{1} << bits.size());
    amps[index] = 1.0;
    return PureState(std::move(amps), Unchecked{});
}

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tol)
    : n_qubits_(qubits_for_dim(m.dim())), mat_(m) {
    if (!m.is_finite()) throw ValidationError("density matrix has a non-finite entry");
    const double defect = hermiticity_defect(m);
    if (defect > tol.hermitian) {
        throw ValidationError("density matrix is not Hermitian: relative defect " + fmt(defect) +
                              " exceeds tolerance " + fmt(tol.hermitian));
    }
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > tol.trace) {
        throw ValidationError("density matrix trace " + fmt(tr.real()) +
                              " differs from 1 by more than tolerance " + fmt(tol.trace));
    }
    const std::vector<double> values = herm_eig(m, tol).values;
    std::copy(values.begin(), values.end(), eigenvalues_.begin());
    const double lowest = values.back();
    if (lowest < -tol.psd_floor) {
        throw ValidationError("density matrix is not positive semidefinite: eigenvalue " + fmt(lowest) +
                              " is below -" + fmt(tol.psd_floor));
    }
}

std::size_t DensityMatrix::numerical_rank(double floor) const {
    const auto values = eigenvalues();
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [floor](double mu) { return mu > floor; }));
}

DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(Matrix::outer(psi.amplitudes(), psi.amplitudes()));
}

PureState bell_state(BellKind kind) {
    const double r = M_SQRT1_2;
    switch (kind) {
        case BellKind::PhiPlus: return PureState({r, 0.0, 0.0, r});
        case BellKind::PhiMinus: return PureState({r, 0.0, 0.0, -r});
        case BellKind::PsiPlus: return PureState({0.0, r, r, 0.0});
        case BellKind::PsiMinus: return PureState({0.0, r, -r, 0.0});
    }
    throw ValidationError("unknown Bell state kind");
}

DensityMatrix bell_diagonal(std::span<const double, 4> p) {
    double total = 0.0;
    for (double pi : p) {
        if (!(pi >= 0.0) || !std::isfinite(pi))
            throw InvalidDistribution("Bell-diagonal weights must be finite and nonnegative");
        total += pi;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw InvalidDistribution("Bell-diagonal weights sum to " + std::to_string(total) + ", not 1");
    }
    constexpr std::array kinds{BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                               BellKind::PsiMinus};
    Matrix m(4);
    for (std::size_t i = 0; i < 4; ++i) {
        const PureState b = bell_state(kinds[i]);
        m += p[i] * Matrix::outer(b.amplitudes(), b.amplitudes());
    }
    return DensityMatrix(m);
}

PureState ghz_state() { return PureState({M_SQRT1_2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, M_SQRT1_2}); }

PureState w_state() {
    const double r = 1.0 / std::sqrt(3.0);
    return PureState({0.0, r, r, 0.0, r, 0.0, 0.0, 0.0});
}

NonconvexityFamily nonconvexity_family(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw OutOfRange("nonconvexity parameter x must lie in [0, 1]");
    const double off = 0.5 * std::sqrt(1.0 - x * x);
    auto member = [&](double sign) {
        Matrix m(4);
        m(0, 0) = 0.5 * (1.0 + sign * x);
        m(0, 3) = off;
        m(3, 0) = off;
        m(3, 3) = 0.5 * (1.0 - sign * x);
        return m;
    };
    const Matrix plus = member(1.0);
    const Matrix minus = member(-1.0);
    return {DensityMatrix(plus), DensityMatrix(minus), DensityMatrix(0.5 * plus + 0.5 * minus)};
}

PureState random_pure(std::size_t n_qubits, const RandomSpec& spec) {
    if (spec.ensemble.kind != EnsembleKind::HaarPure)
        throw ConfigError("random_pure requires the HaarPure ensemble");
    Rng rng(spec.seed, spec.stream);
    return random_pure(n_qubits, rng);
}

PureState random_pure(std::size_t n_qubits, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 3) throw DimensionError("random_pure supports 1 to 3 qubits");
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    for (Complex& z : amps) z = rng.complex_normal();
    return PureState::normalized(std::move(amps));
}

DensityMatrix random_mixed(std::size_t n_qubits, std::size_t rank, const RandomSpec& spec) {
    Rng rng(spec.seed, spec.stream);
    return random_mixed(n_qubits, rank, rng);
}

DensityMatrix random_mixed(std::size_t n_qubits, std::size_t rank, Rng& rng) {
    if (n_qubits < 1 || n_qubits > 3) throw DimensionError("random_mixed supports 1 to 3 qubits");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (rank < 1 || rank > dim) {
        throw InvalidRank("rank must lie in [1, " + std::to_string(dim) + "], got " +
                          std::to_string(rank));
    }
    std::vector<Complex> g(dim * rank);
    for (Complex& z : g) z = rng.complex_normal();

    Matrix m(dim);
    double tr = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r; c < dim; ++c) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < rank; ++k) s += g[r * rank + k] * std::conj(g[c * rank + k]);
            m(r, c) = s;
            m(c, r) = std::conj(s);
        }
        m(r, r) = m(r, r).real();
        tr += m(r, r).real();
    }
    m *= 1.0 / tr;
    return DensityMatrix(m);
}

Matrix random_unitary_2(Rng& rng) {
    std::array<Complex, 2> a{rng.complex_normal(), rng.complex_normal()};
    std::array<Complex, 2> b{rng.complex_normal(), rng.complex_normal()};
    const double na = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
    a[0] /= na;
    a[1] /= na;
    const Complex proj = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
    b[0] -= proj * a[0];
    b[1] -= proj * a[1];
    const double nb = std::sqrt(std::norm(b[0]) + std::norm(b[1]));
    b[0] /= nb;
    b[1] /= nb;
    return Matrix(2, {a[0], b[0], a[1], b[1]});
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
    const std::size_t n = rho.n_qubits();
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (kept.empty() || kept.size() >= n || std::adjacent_find(kept.begin(), kept.end()) != kept.end() ||
        kept.back() >= n) {
        throw InvalidSubset("kept qubits must be a nonempty proper subset of distinct indices below " +
                            std::to_string(n));
    }
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

    // Full-register index from the bits of the kept and traced qubits.
    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            const std::size_t bit = (kept_bits >> (kept.size() - 1 - i)) & 1U;
            index |= bit << (n - 1 - kept[i]);
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
            const std::size_t bit = (traced_bits >> (traced.size() - 1 - i)) & 1U;
            index |= bit << (n - 1 - traced[i]);
        }
        return index;
    };

    const std::size_t out_dim = std::size_t{1} << kept.size();
    const std::size_t env_dim = std::size_t{1} << traced.size();
    Matrix out(out_dim);
    for (std::size_t r = 0; r < out_dim; ++r)
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex s = 0.0;
            for (std::size_t t = 0; t < env_dim; ++t) s += rho(compose(r, t), compose(c, t));
            out(r, c) = s;
        }
    return DensityMatrix(out);
}

std::string to_string(BellKind kind) {
    switch (kind) {
        case BellKind::PhiPlus: return "phi+";
        case BellKind::PhiMinus: return "phi-";
        case BellKind::PsiPlus: return "psi+";
        case BellKind::PsiMinus: return "psi-";
    }
    return "?";
}

}  // namespace harmony
