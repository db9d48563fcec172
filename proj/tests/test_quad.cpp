#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "deltazeta/errors.hpp"
#include "deltazeta/quad.hpp"
#include "deltazeta/specfun.hpp"

using namespace deltazeta;
using namespace deltazeta::quad;
using doctest::Approx;

TEST_CASE("finite intervals")
{
    auto r = integrate_finite([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.converged);
    CHECK(r.value == Approx(2.0).epsilon(1e-12));
    CHECK(r.error_estimate < 1e-8);
    CHECK(integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0).value == Approx(2.0).epsilon(1e-8));
    QuadratureSpec split;
    split.split_points = {0.3};
    CHECK(integrate_finite([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, split).value ==
          Approx(0.045 + 0.245).epsilon(1e-13));
    auto c = integrate_finite([](double x) { return std::complex<double>(x, x * x); }, 0.0, 1.0);
    CHECK(c.value.real() == Approx(0.5).epsilon(1e-13));
    CHECK(c.value.imag() == Approx(1.0 / 3).epsilon(1e-13));
    CHECK(integrate_finite([](double x) { return x; }, 0.0, 1.0).value == Approx(0.5).epsilon(1e-15));
    CHECK(integrate_finite([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0).value ==
          Approx(std::numbers::pi / 4).epsilon(1e-14));
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 2.0, 1.0), DomainError);
}

TEST_CASE("semi-infinite intervals")
{
    CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0).value == Approx(1.0).epsilon(1e-10));
    CHECK(integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0).value ==
          Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-10));
    CHECK(integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0).value ==
          Approx(std::numbers::pi / 2).epsilon(1e-9));
}

TEST_CASE("oscillatory tails")
{
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-11;
    spec.oscillation_period = std::numbers::pi;
    auto r = integrate_to_infinity([](double v) { return std::cos(2 * v) / (v * v); }, 1.0, spec);
    CHECK(r.converged);
    CHECK(r.value == Approx(-0.346913536531545928).epsilon(1e-10));
    auto ci = integrate_to_infinity([](double v) { return std::cos(2 * v) / v; }, 1.0, spec);
    CHECK(ci.value == Approx(-specfun::cosine_integral(2.0)).epsilon(1e-10));
    CHECK(integrate_finite([](double v) { return std::cos(2 * v) / (v * v); }, 1.0, 10.0, spec).value ==
          Approx(-0.342612491209971569).epsilon(1e-11));
}

TEST_CASE("additivity and redundant split points")
{
    const double c = 4 * std::numbers::pi * 0.25;
    auto e = [c](double v) { return 1.0 / (c * c + v * v); };
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-12;
    auto whole = integrate_to_infinity(e, 0.0, spec);
    auto head = integrate_finite(e, 0.0, 1.0, spec);
    auto tail = integrate_to_infinity(e, 1.0, spec);
    CHECK(std::abs(whole.value - head.value - tail.value) <=
          whole.error_estimate + head.error_estimate + tail.error_estimate + 1e-14);
    QuadratureSpec extra = spec;
    extra.split_points = {0.5, 2.0, 7.0};
    CHECK(std::abs(integrate_to_infinity(e, 0.0, extra).value - whole.value) < 10 * spec.abs_tol);
}

TEST_CASE("failures")
{
    QuadratureSpec bad;
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 0.0, 1.0, bad), DomainError);
    QuadratureSpec unordered;
    unordered.split_points = {2.0, 1.0};
    CHECK_THROWS_AS(unordered.validate(), DomainError);
    CHECK_THROWS_AS(integrate_finite([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
                    IntegrandError);
    QuadratureSpec tight;
    tight.max_subdivisions = 1;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    auto r = integrate_finite([](double x) { return std::sin(50 * x) / std::sqrt(x); }, 0.0, 10.0, tight);
    CHECK_FALSE(r.converged);
    CHECK(r.error_estimate > 1e-15);
}
