#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "asymm_osc/errors.hpp"
#include "asymm_osc/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace asymm_osc;

TEST_CASE("polynomials are exact") {
    const QuadratureSettings qs;
    const auto r = integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0, qs);
    CHECK(r.value == doctest::Approx(9.0 - 3.0 + 3.0).epsilon(1e-14));
    CHECK(r.evaluations > 0);
}

TEST_CASE("smooth integrands") {
    const QuadratureSettings qs;
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0, qs).value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, qs).value ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, qs).value ==
          doctest::Approx(std::sin(40.0) / 40.0).epsilon(1e-11));
}

TEST_CASE("endpoint singularity converges adaptively") {
    const QuadratureSettings qs;
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, qs);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("reversed and empty intervals") {
    const QuadratureSettings qs;
    CHECK(integrate([](double x) { return x; }, 1.0, 0.0, qs).value == doctest::Approx(-0.5));
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0, qs).value == 0.0);
}

TEST_CASE("budget exhaustion raises ConvergenceError") {
    QuadratureSettings qs;
    qs.max_subdivisions = 16;
    qs.rel_tol = 1e-15;
    qs.abs_tol = 1e-300;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, qs), ConvergenceError);
}

TEST_CASE("settings validation") {
    QuadratureSettings qs;
    CHECK_NOTHROW(qs.validate());
    qs.rel_tol = 0.0;
    CHECK_THROWS_AS(qs.validate(), PreconditionError);
    qs = {};
    qs.abs_tol = -1.0;
    CHECK_THROWS_AS(qs.validate(), PreconditionError);
    qs = {};
    qs.max_subdivisions = 8;
    CHECK_THROWS_AS(qs.validate(), PreconditionError);
}
