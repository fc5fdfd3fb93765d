#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "nwl/entanglement.hpp"
#include "nwl/nonlocal.hpp"
#include "nwl/states.hpp"
#include "support.hpp"

using namespace nwl;

namespace {

// Random mixture of product states: separable by construction.
DensityMatrix random_separable(SplitMix64& rng, std::size_t terms) {
    ComplexMatrix acc(4, 4);
    std::vector<double> weights(terms);
    double total = 0.0;
    for (double& w : weights) {
        w = rng.next_double();
        total += w;
    }
    for (std::size_t t = 0; t < terms; ++t) {
        const ComplexMatrix ua = testing::random_unitary2(rng);
        const ComplexMatrix ub = testing::random_unitary2(rng);
        std::vector<Complex> amps(4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                amps[2 * i + j] = ua(i, 0) * ub(j, 0);
        acc += (weights[t] / total) * PureState(2, std::move(amps)).projector();
    }
    return DensityMatrix(std::move(acc));
}

} // namespace

TEST_CASE("partial-transpose eigenvalue on the pure family") {
    for (double theta : {0.0, 0.3, M_PI / 8, M_PI / 4, 1.2, M_PI / 2}) {
        for (double phi : {0.0, 1.0, M_PI / 2}) {
            const DensityMatrix rho = density_matrix(pure_system_state(theta, phi));
            const double expected = -std::abs(std::sin(2 * theta)) / 2.0;
            CHECK(std::abs(ppt_min_eigenvalue(rho) - expected) < 1e-12);
        }
    }
    CHECK(std::abs(ppt_min_eigenvalue(density_matrix(bell_state(BellKind::PsiMinus))) + 0.5) <
          1e-12);
}

TEST_CASE("partial-transpose eigenvalue on Werner mixtures") {
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
        CHECK(std::abs(ppt_min_eigenvalue(werner_state(p)) - (1 - 3 * p) / 4) < 1e-12);
    }
    // The sign change brackets the separability threshold.
    CHECK(ppt_min_eigenvalue(werner_state(1.0 / 3.0 - 1e-6)) > 0.0);
    CHECK(ppt_min_eigenvalue(werner_state(1.0 / 3.0 + 1e-6)) < 0.0);
}

TEST_CASE("concurrence on the pure family ignores the phase") {
    for (double theta : {0.0, 0.3, M_PI / 8, M_PI / 4, 1.2, M_PI / 2}) {
        const double expected = std::abs(std::sin(2 * theta));
        for (double phi : {0.0, 1.0, M_PI / 2, 3.0}) {
            const DensityMatrix rho = density_matrix(pure_system_state(theta, phi));
            CHECK(std::abs(concurrence(rho) - expected) < 1e-9);
        }
    }
}

TEST_CASE("concurrence on Werner mixtures") {
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
        const double expected = std::max(0.0, (3 * p - 1) / 2);
        CHECK(std::abs(concurrence(werner_state(p)) - expected) < 1e-9);
    }
    CHECK(concurrence(werner_state(0.1)) == 0.0);
}

TEST_CASE("concurrence of the post-protocol state equals |cos(phi) sin(2 theta)|") {
    for (double theta : {0.1, M_PI / 8, M_PI / 4, 1.3}) {
        for (double phi : {0.0, M_PI / 4, M_PI / 2, 2.8}) {
            const double c = std::cos(phi) * std::sin(2 * theta);
            ComplexMatrix m(4, 4);
            m(1, 1) = m(2, 2) = 0.5;
            m(1, 2) = m(2, 1) = c / 2.0;
            const DensityMatrix rho2{std::move(m)};
            CHECK(std::abs(concurrence(rho2) - std::abs(c)) < 1e-9);
            // For this rank-2 form the two measures are locked together.
            CHECK(std::abs(ppt_min_eigenvalue(rho2) + std::abs(c) / 2) < 1e-12);
        }
    }
}

TEST_CASE("concurrence vanishes to round-off at the degenerate grid points") {
    // Through the full analytic protocol, not just the closed-form matrix.
    for (double theta : {0.0, M_PI / 2, M_PI}) {
        const auto res = run_protocol_analytic(density_matrix(pure_system_state(theta, 0.7)));
        CHECK(concurrence(res.rho2) <= 1e-12);
    }
    for (double theta : {0.3, M_PI / 8, 1.1}) {
        const auto res =
            run_protocol_analytic(density_matrix(pure_system_state(theta, M_PI / 2)));
        CHECK(concurrence(res.rho2) <= 1e-12);
    }
}

TEST_CASE("spin-flip spectrum variant") {
    // On a product state the raw spectrum saturates at 1 while the proper
    // measure vanishes; the variant is kept for comparison plots only.
    const DensityMatrix product = density_matrix(pure_system_state(0.0, 0.0));
    CHECK(std::abs(concurrence(product, ConcurrenceMethod::SpinFlipSpectrum) - 1.0) < 1e-9);
    CHECK(concurrence(product, ConcurrenceMethod::Wootters) == 0.0);

    // Werner states are invariant under the spin flip, so both agree there.
    for (double p : {0.0, 0.4, 0.8, 1.0}) {
        const double a = concurrence(werner_state(p), ConcurrenceMethod::Wootters);
        const double b = concurrence(werner_state(p), ConcurrenceMethod::SpinFlipSpectrum);
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("separable mixtures never flag as entangled") {
    SplitMix64 rng(41);
    for (int rep = 0; rep < 25; ++rep) {
        const DensityMatrix rho = random_separable(rng, 3 + rep % 4);
        CHECK(ppt_min_eigenvalue(rho) > -1e-10);
        CHECK(concurrence(rho) < 1e-8);
        CHECK_FALSE(report(rho).is_entangled);
    }
}

TEST_CASE("Werner region classification") {
    CHECK(classify_werner(0.0).kind == WernerRegionKind::I);
    CHECK(classify_werner(1.0 / 3.0).kind == WernerRegionKind::I); // boundary included
    CHECK(classify_werner(1.0 / 3.0 + 1e-12).kind == WernerRegionKind::II);
    CHECK(classify_werner(0.5).kind == WernerRegionKind::II);
    CHECK(classify_werner(1.0 / std::sqrt(2.0)).kind == WernerRegionKind::II);
    CHECK(classify_werner(1.0 / std::sqrt(2.0) + 1e-12).kind == WernerRegionKind::III);
    CHECK(classify_werner(1.0).kind == WernerRegionKind::III);

    CHECK(werner_region_name(WernerRegionKind::I) == std::string("I"));
    CHECK(werner_region_name(WernerRegionKind::II) == std::string("II"));
    CHECK(werner_region_name(WernerRegionKind::III) == std::string("III"));

    CHECK_THROWS_AS(classify_werner(-0.01), OutOfRange);
    CHECK_THROWS_AS(classify_werner(1.01), OutOfRange);
    CHECK_THROWS_AS(classify_werner(std::nan("")), OutOfRange);
}

TEST_CASE("summary report") {
    const EntanglementReport bell = report(density_matrix(bell_state(BellKind::PhiPlus)));
    CHECK(std::abs(bell.ppt_min_eigenvalue + 0.5) < 1e-12);
    CHECK(std::abs(bell.concurrence - 1.0) < 1e-9);
    CHECK(bell.is_entangled);

    const EntanglementReport sep = report(werner_state(0.2));
    CHECK(sep.ppt_min_eigenvalue > 0.0);
    CHECK(sep.concurrence == 0.0);
    CHECK_FALSE(sep.is_entangled);
}

TEST_CASE("dimension checks") {
    SplitMix64 rng(42);
    const DensityMatrix one_qubit = testing::random_density(rng, 2);
    CHECK_THROWS_AS(ppt_min_eigenvalue(one_qubit), DimensionMismatch);
    CHECK_THROWS_AS(concurrence(one_qubit), DimensionMismatch);
}
