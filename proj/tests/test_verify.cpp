#include <doctest.h>

#include <array>
#include <cmath>

#include "harmony/error.hpp"
#include "harmony/measures.hpp"
#include "harmony/verify.hpp"
#include "support.hpp"

namespace harmony {

TEST_SUITE("verify") {

TEST_CASE("search on a Bell state with K = 1") {
    DecompositionSearchConfig cfg;
    cfg.k_states = 1;
    cfg.restarts = 2;
    const VerificationReport r = eof_decomposition_search(test::rho_of(BellKind::PhiPlus), cfg);
    CHECK(r.rank == 1);
    CHECK(std::abs(r.searched_eof - std::log(2.0)) < 1e-12);
    CHECK(std::abs(r.gap) < 1e-12);
}

TEST_CASE("search on a separable classical mixture") {
    const std::array<double, 4> d{0.5, 0.0, 0.0, 0.5};
    const DensityMatrix rho(Matrix::diagonal(std::span<const double>(d)));
    DecompositionSearchConfig cfg;
    cfg.k_states = 4;
    cfg.seed = 3;
    const VerificationReport r = eof_decomposition_search(rho, cfg);
    CHECK(r.closed_form_eof == 0.0);
    CHECK(r.searched_eof < 1e-6);
    CHECK(r.searched_eof >= -1e-12);
}

TEST_CASE("search reproduces the Bell-diagonal closed form") {
    DecompositionSearchConfig cfg;
    cfg.seed = 4;
    const VerificationReport r = eof_decomposition_search(bell_diagonal(std::array<double, 4>{0.7, 0.1, 0.1, 0.1}), cfg);
    CHECK(r.closed_form_eof == doctest::Approx(0.17344269).epsilon(1e-7));
    CHECK(r.gap <= 1e-3);
    CHECK(r.gap >= -1e-6);
    CHECK(r.max_reconstruction_error <= 1e-9);
    CHECK(r.restart_trace.size() == cfg.restarts);
}

TEST_CASE("search is deterministic per (seed, stream)") {
    Rng rng(71, 0);
    const DensityMatrix rho = random_mixed(2, 3, rng);
    DecompositionSearchConfig cfg;
    cfg.restarts = 3;
    cfg.max_iters = 100;
    cfg.seed = 9;
    cfg.stream = 2;
    const VerificationReport a = eof_decomposition_search(rho, cfg);
    const VerificationReport b = eof_decomposition_search(rho, cfg);
    CHECK(a.restart_trace == b.restart_trace);
    cfg.stream = 3;
    CHECK(eof_decomposition_search(rho, cfg).restart_trace != a.restart_trace);
}

TEST_CASE("search configuration errors") {
    Rng rng(72, 0);
    const DensityMatrix rho = random_mixed(2, 4, rng);
    DecompositionSearchConfig cfg;
    cfg.k_states = 2;
    CHECK_THROWS_WITH_AS(eof_decomposition_search(rho, cfg), doctest::Contains("K >= rank"), ConfigError);
    cfg = {};
    cfg.restarts = 0;
    CHECK_THROWS_AS(eof_decomposition_search(rho, cfg), ConfigError);
    cfg = {};
    cfg.step_decay = 1.5;
    CHECK_THROWS_AS(eof_decomposition_search(rho, cfg), ConfigError);
    CHECK_THROWS_AS(eof_decomposition_search(from_pure(ghz_state()), {}), DimensionError);
}

TEST_CASE("disharmony routes") {
    RouteValues r = disharmony_routes(test::rho_of(BellKind::PhiPlus));
    CHECK(std::abs(r.poly + 1.0) < 1e-10);
    CHECK(r.max_discrepancy() <= 1e-10);
    r = disharmony_routes(test::maximally_mixed(4));
    CHECK(std::abs(r.poly - 1.0 / 16.0) < 1e-10);
    CHECK(crosscheck_disharmony_routes(test::maximally_mixed(4)) <= 1e-10);
}

TEST_CASE("non-monotonicity table") {
    const std::array<double, 3> xs{0.0, 1.0, 0.6};
    const auto rows = reproduce_nonmonotonicity(xs);
    CHECK(rows[0].h_mixture == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].h_plus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(rows[0].gap) < 1e-12);
    CHECK(std::abs(rows[1].h_mixture) < 1e-12);
    CHECK(std::abs(rows[1].h_plus) < 1e-12);
    CHECK(std::abs(rows[1].gap) < 1e-12);
    CHECK(rows[2].h_mixture == doctest::Approx(0.64).epsilon(1e-12));
    CHECK(rows[2].h_plus == doctest::Approx(0.4096).epsilon(1e-12));
    CHECK(rows[2].h_minus == doctest::Approx(0.4096).epsilon(1e-12));
    CHECK(rows[2].gap == doctest::Approx(0.2304).epsilon(1e-12));

    const std::array<double, 1> bad{1.5};
    CHECK_THROWS_AS(reproduce_nonmonotonicity(bad), OutOfRange);
}

TEST_CASE("non-monotonicity gap on a dense grid") {
    std::vector<double> xs;
    for (int i = 0; i <= 1000; ++i) xs.push_back(i / 1000.0);
    for (const NonmonotonicityRow& r : reproduce_nonmonotonicity(xs)) {
        CHECK(r.gap >= -1e-12);
        if (r.x > 0.0 && r.x < 1.0) CHECK(r.gap > 0.0);
        CHECK(std::abs(r.h_mixture - (1 - r.x * r.x)) < 1e-12);
        CHECK(std::abs(r.h_plus - (1 - r.x * r.x) * (1 - r.x * r.x)) < 1e-12);
    }
}

TEST_CASE("local unitary sweep errors") { CHECK_THROWS_AS(local_unitary_sweep(0, RandomSpec{}), ConfigError); }

}  // TEST_SUITE

TEST_SUITE("verify-properties") {

TEST_CASE("oracle sandwich and decomposition validity on random states") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        Rng rng(73, i);
        const DensityMatrix rho = random_mixed(2, 1 + rng.index(4), rng);
        DecompositionSearchConfig cfg;
        cfg.seed = 73;
        cfg.stream = i;
        const VerificationReport r = eof_decomposition_search(rho, cfg);
        CHECK(r.searched_eof >= r.closed_form_eof - 1e-6);
        CHECK(r.gap <= 1e-3);
        CHECK(r.max_reconstruction_error <= 1e-9);
    }
}

}  // TEST_SUITE

}  // namespace harmony
