#include <doctest.h>

#include <array>
#include <cmath>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/states.hpp"
#include "support.hpp"

namespace harmony {
using test::basis_rho;
using test::max_abs_diff;
using test::rho_of;

namespace {

bool same_amplitudes(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("from_pure") {
    const DensityMatrix r00 = basis_rho("00");
    CHECK(r00(0, 0) == Complex(1.0));
    CHECK(max_abs_diff(r00.matrix(), Matrix::diagonal(std::span<const double>(std::array<double, 4>{1, 0, 0, 0}))) == 0.0);

    const DensityMatrix bell = rho_of(BellKind::PhiPlus);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const bool corner = (r == 0 || r == 3) && (c == 0 || c == 3);
            CHECK(std::abs(bell(r, c) - (corner ? 0.5 : 0.0)) < 1e-15);
        }
    CHECK(std::abs(bell.matrix().trace() - 1.0) < 1e-15);
}

TEST_CASE("bell states") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState phi = bell_state(BellKind::PhiPlus);
    CHECK(std::abs(phi[0] - s) < 1e-15);
    CHECK(std::abs(phi[3] - s) < 1e-15);
    const PureState psi = bell_state(BellKind::PsiPlus);
    CHECK(std::abs(psi[1] - s) < 1e-15);
    CHECK(std::abs(psi[2] - s) < 1e-15);
    CHECK(std::abs(bell_state(BellKind::PhiMinus)[3] + s) < 1e-15);
    CHECK(std::abs(bell_state(BellKind::PsiMinus)[2] + s) < 1e-15);
    CHECK(to_string(BellKind::PsiMinus) == "psi-");
}

TEST_CASE("bell_diagonal") {
    CHECK(max_abs_diff(bell_diagonal(std::array<double, 4>{1, 0, 0, 0}).matrix(), rho_of(BellKind::PhiPlus).matrix()) <
          1e-15);
    CHECK(max_abs_diff(bell_diagonal(std::array<double, 4>{0.25, 0.25, 0.25, 0.25}).matrix(),
                       Complex(0.25) * Matrix::identity(4)) < 1e-15);

    const DensityMatrix rho = bell_diagonal(std::array<double, 4>{0.7, 0.1, 0.1, 0.1});
    const std::vector<double> lam = harmony::test::oracle_lambdas(rho.matrix());
    CHECK(lam[0] == doctest::Approx(0.7).epsilon(1e-12));
    for (std::size_t i = 1; i < 4; ++i) CHECK(lam[i] == doctest::Approx(0.1).epsilon(1e-12));

    CHECK_THROWS_AS(bell_diagonal(std::array<double, 4>{0.5, 0.5, 0.5, -0.5}), InvalidDistribution);
    CHECK_THROWS_AS(bell_diagonal(std::array<double, 4>{0.5, 0.5, 0.5, 0.5}), InvalidDistribution);
}

TEST_CASE("nonconvexity family") {
    NonconvexityFamily f = nonconvexity_family(1.0);
    CHECK(max_abs_diff(f.rho_plus.matrix(), basis_rho("00").matrix()) < 1e-15);
    CHECK(max_abs_diff(f.rho_minus.matrix(), basis_rho("11").matrix()) < 1e-15);
    CHECK(max_abs_diff(f.mixture.matrix(),
                       Complex(0.5) * (basis_rho("00").matrix() + basis_rho("11").matrix())) < 1e-15);

    f = nonconvexity_family(0.0);
    CHECK(max_abs_diff(f.rho_plus.matrix(), rho_of(BellKind::PhiPlus).matrix()) < 1e-15);
    CHECK(max_abs_diff(f.rho_minus.matrix(), rho_of(BellKind::PhiPlus).matrix()) < 1e-15);

    f = nonconvexity_family(0.6);
    CHECK(harmony(f.mixture) == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(harmony(f.rho_plus) == doctest::Approx(0.4096).epsilon(1e-12));
    CHECK(harmony(f.rho_minus) == doctest::Approx(0.4096).epsilon(1e-12));

    CHECK_THROWS_AS(nonconvexity_family(-0.1), OutOfRange);
    CHECK_THROWS_AS(nonconvexity_family(1.1), OutOfRange);
}

TEST_CASE("GHZ and W") {
    const DensityMatrix ghz = from_pure(ghz_state());
    CHECK(ghz.n_qubits() == 3);
    CHECK(std::abs(ghz(0, 7) - 0.5) < 1e-15);
    const DensityMatrix w = from_pure(w_state());
    CHECK(std::abs(w(1, 2) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(w(4, 4) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("pure state validation") {
    CHECK_THROWS_AS(PureState(std::vector<Complex>{1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(PureState(std::vector<Complex>{1.0, 0.0, 0.0}), DimensionError);
    CHECK_NOTHROW(PureState::normalized({1.0, 1.0}));
    CHECK(PureState::basis("101")[5] == Complex(1.0));
}

TEST_CASE("density matrix validation names the invariant") {
    Matrix m = Matrix::identity(2);
    CHECK_THROWS_WITH_AS(DensityMatrix{m}, doctest::Contains("trace"), ValidationError);
    m = Complex(0.5) * Matrix::identity(2);
    m(0, 1) = 0.1;
    CHECK_THROWS_WITH_AS(DensityMatrix{m}, doctest::Contains("Hermitian"), ValidationError);
    m = Matrix(2, {1.5, 0.0, 0.0, -0.5});
    CHECK_THROWS_WITH_AS(DensityMatrix{m}, doctest::Contains("semidefinite"), ValidationError);
    m = Matrix(2, {std::nan(""), 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(DensityMatrix{m}, ValidationError);
}

TEST_CASE("random_pure") {
    const RandomSpec spec{5, 3, {}};
    const PureState a = random_pure(2, spec);
    const PureState b = random_pure(2, spec);
    CHECK(same_amplitudes(a, b));
    CHECK_FALSE(same_amplitudes(a, random_pure(2, RandomSpec{5, 4, {}})));
    double norm = 0.0;
    for (Complex z : a.amplitudes()) norm += std::norm(z);
    CHECK(std::abs(norm - 1.0) < 1e-10);
    CHECK_THROWS_AS(random_pure(2, RandomSpec{1, 0, {EnsembleKind::InducedMixed, 2}}), ConfigError);
}

TEST_CASE("Haar marginal purity moment is 4/5") {
    // E tr(rho_A^2) = (dA + dB) / (dA dB + 1) for Haar states on C^dA (x) C^dB.
    double sum = 0.0;
    const int n = 10000;
    const std::array<std::size_t, 1> keep{0};
    for (int i = 0; i < n; ++i) {
        Rng rng(31, static_cast<std::uint64_t>(i));
        sum += purity(partial_trace(from_pure(random_pure(2, rng)), keep));
    }
    CHECK(std::abs(sum / n - 0.8) < 0.01);
}

TEST_CASE("random_mixed") {
    Rng rng(32, 0);
    const DensityMatrix r1 = random_mixed(2, 1, rng);
    CHECK(purity(r1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.numerical_rank() == 1);
    for (std::size_t rank = 1; rank <= 4; ++rank) {
        const DensityMatrix r = random_mixed(2, rank, rng);
        CHECK(r.numerical_rank() == rank);
        CHECK(std::abs(r.matrix().trace() - 1.0) < 1e-12);
        for (double e : r.eigenvalues()) CHECK(e >= -1e-9);
    }
    CHECK_THROWS_AS(random_mixed(2, 0, rng), InvalidRank);
    CHECK_THROWS_AS(random_mixed(2, 5, rng), InvalidRank);
    CHECK(random_mixed(3, 8, rng).numerical_rank() == 8);

    const RandomSpec spec{9, 1, {EnsembleKind::InducedMixed, 3}};
    CHECK(max_abs_diff(random_mixed(2, 3, spec).matrix(), random_mixed(2, 3, spec).matrix()) == 0.0);
}

TEST_CASE("induced-measure purity moment is 8/17 at full rank") {
    double sum = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        Rng rng(33, static_cast<std::uint64_t>(i));
        sum += purity(random_mixed(2, 4, rng));
    }
    CHECK(std::abs(sum / n - 8.0 / 17.0) < 0.01);
}

TEST_CASE("partial_trace") {
    const std::array<std::size_t, 1> a{0};
    const std::array<std::size_t, 1> b{1};
    CHECK(max_abs_diff(partial_trace(rho_of(BellKind::PhiPlus), a).matrix(), Complex(0.5) * Matrix::identity(2)) <
          1e-15);
    CHECK(max_abs_diff(partial_trace(basis_rho("01"), b).matrix(), basis_rho("1").matrix()) == 0.0);
    CHECK(max_abs_diff(partial_trace(from_pure(ghz_state()), a).matrix(), Complex(0.5) * Matrix::identity(2)) <
          1e-15);

    const std::array<std::size_t, 2> keep_swapped{1, 0};
    const DensityMatrix p = partial_trace(basis_rho("011"), keep_swapped);
    CHECK(p(1, 1) == Complex(1.0));  // kept qubits come back in increasing order: |01>

    const std::array<std::size_t, 1> out_of_range{3};
    CHECK_THROWS_AS(partial_trace(from_pure(ghz_state()), out_of_range), InvalidSubset);
    const std::array<std::size_t, 2> dup{0, 0};
    CHECK_THROWS_AS(partial_trace(from_pure(ghz_state()), dup), InvalidSubset);
    const std::array<std::size_t, 0> none{};
    CHECK_THROWS_AS(partial_trace(from_pure(ghz_state()), none), InvalidSubset);
}

}  // TEST_SUITE

TEST_SUITE("states-properties") {

TEST_CASE("Schmidt symmetry of 2-qubit marginals") {
    const std::array<std::size_t, 1> a{0};
    const std::array<std::size_t, 1> b{1};
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng(41, i);
        const DensityMatrix rho = from_pure(random_pure(2, rng));
        const DensityMatrix ra = partial_trace(rho, a);
        const DensityMatrix rb = partial_trace(rho, b);
        const auto ea = ra.eigenvalues();
        const auto eb = rb.eigenvalues();
        for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(ea[k] - eb[k]) < 1e-10);
    }
}

TEST_CASE("partial trace composes") {
    const std::array<std::size_t, 2> xy{0, 1};
    const std::array<std::size_t, 1> x_of_xy{0};
    const std::array<std::size_t, 1> x{0};
    const std::array<std::size_t, 2> yz{1, 2};
    const std::array<std::size_t, 1> z_of_yz{1};
    const std::array<std::size_t, 1> z{2};
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng rng(42, i);
        const DensityMatrix rho = random_mixed(3, 1 + rng.index(8), rng);
        CHECK(max_abs_diff(partial_trace(partial_trace(rho, xy), x_of_xy).matrix(), partial_trace(rho, x).matrix()) <
              1e-12);
        CHECK(max_abs_diff(partial_trace(partial_trace(rho, yz), z_of_yz).matrix(), partial_trace(rho, z).matrix()) <
              1e-12);
    }
}

TEST_CASE("constructor outputs validate") {
    for (BellKind k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus, BellKind::PsiMinus})
        CHECK_NOTHROW(DensityMatrix(rho_of(k).matrix()));
    for (double x = 0.0; x <= 1.0; x += 0.05) {
        const NonconvexityFamily f = nonconvexity_family(std::min(x, 1.0));
        CHECK_NOTHROW(DensityMatrix(f.mixture.matrix()));
        CHECK_NOTHROW(DensityMatrix(f.rho_plus.matrix()));
    }
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng(43, i);
        const std::size_t n = 1 + rng.index(3);
        const std::size_t rank = 1 + rng.index(std::size_t{1} << n);
        CHECK_NOTHROW(DensityMatrix(random_mixed(n, rank, rng).matrix()));
        CHECK_NOTHROW(DensityMatrix(from_pure(random_pure(n, rng)).matrix()));
    }
}

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a(7, 1), b(7, 1), c(7, 2), d(7, 1, 1);
    const double va = a.uniform();
    CHECK(va == b.uniform());
    CHECK(va != c.uniform());
    CHECK(va != d.uniform());
}

}  // TEST_SUITE

}  // namespace harmony
