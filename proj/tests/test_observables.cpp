#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymm_osc/errors.hpp"
#include "asymm_osc/observables.hpp"

#include <cmath>

using namespace asymm_osc;

TEST_CASE("ladder oracle in the symmetric case") {
    const auto basis = wavefun::build_basis({1.0, 1.0}, 6);
    const auto m = observables::x_matrix(basis);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const double expected = (std::abs(i - j) == 1) ? std::sqrt(std::max(i, j) / 2.0) : 0.0;
            CHECK(std::abs(m[i][j] - expected) <= 1e-9);
        }
    }
}

TEST_CASE("x matrix is symmetric and the Gram matrix is the identity") {
    for (double s : {std::sqrt(5.0), std::sqrt(30.0)}) {
        const auto basis = wavefun::build_basis({s, 1.0}, 8);
        const auto g = observables::gram_matrix(basis);
        const auto m = observables::x_matrix(basis);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                CHECK(std::abs(g[i][j] - (i == j ? 1.0 : 0.0)) <= 1e-8);
                CHECK(m[i][j] == m[j][i]);
            }
        }
    }
}

TEST_CASE("the particle leans into the softer side") {
    const auto basis = wavefun::build_basis({std::sqrt(5.0), 1.0}, 4);
    for (const auto& psi : basis) {
        CHECK(observables::mean_position(psi) < 0.0);
    }
}

TEST_CASE("mismatched configurations are rejected") {
    const auto a = wavefun::build_basis({2.0, 1.0}, 1).front();
    const auto b = wavefun::build_basis({3.0, 1.0}, 1).front();
    CHECK_THROWS_AS(observables::inner_product(a, b), PreconditionError);
}

TEST_CASE("beat signal") {
    const OscillatorConfig c{std::sqrt(5.0), 1.0};
    const BeatSignal b = observables::beat_signal(c, 0, 1, 20.0, 41);
    CHECK(b.frequency == doctest::Approx(0.607003).epsilon(1e-6));
    REQUIRE(b.samples.size() == 41);
    CHECK(b.samples.front().t == 0.0);
    CHECK(b.samples.back().t == 20.0);
    for (const auto& smp : b.samples) {
        CHECK(smp.value == doctest::Approx(b.center + b.amplitude * std::cos(b.frequency * smp.t)));
    }
    const auto basis = wavefun::build_basis(c, 2);
    for (double t : {0.0, 1.7, 6.2, 13.0}) {
        CHECK(std::abs(observables::evolved_mean_position(basis[0], basis[1], t) -
                       (b.center + b.amplitude * std::cos(b.frequency * t))) <= 1e-6);
    }
}

TEST_CASE("symmetric beats are a pure cosine") {
    const BeatSignal b = observables::beat_signal({1.0, 1.0}, 0, 1, 10.0, 5);
    CHECK(std::abs(b.center) <= 1e-12);
    CHECK(b.amplitude == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(b.frequency == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("beat preconditions") {
    const OscillatorConfig c{2.0, 1.0};
    CHECK_THROWS_AS(observables::beat_signal(c, 1, 1, 1.0, 5), PreconditionError);
    CHECK_THROWS_AS(observables::beat_signal(c, -1, 1, 1.0, 5), PreconditionError);
    CHECK_THROWS_AS(observables::beat_signal(c, 0, 1, 0.0, 5), PreconditionError);
    CHECK_THROWS_AS(observables::beat_signal(c, 0, 1, 1.0, 1), PreconditionError);
}
