#include <doctest.h>

#include <cmath>
#include <numbers>

#include "deltazeta/errors.hpp"
#include "deltazeta/specfun.hpp"

using namespace deltazeta;
using namespace deltazeta::specfun;
using doctest::Approx;

TEST_CASE("log_gamma and binet_remainder")
{
    CHECK(log_gamma(1.0) == Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(0.5) == Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
    CHECK(log_gamma(10.0) == Approx(std::log(362880.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.0), DomainError);
    // mu(x) = log Gamma(x) - (x - 1/2) log x + x - log(2 pi)/2
    CHECK(binet_remainder(1.0) == Approx(0.0810614667953272582).epsilon(1e-13));
    CHECK(binet_remainder(2.0) == Approx(0.0413406959554092941).epsilon(1e-13));
    CHECK(binet_remainder(0.5) == Approx(0.153426409720027345).epsilon(1e-13));
    CHECK(binet_remainder(1e6) == Approx(1.0 / 12e6).epsilon(1e-10));
}

TEST_CASE("erfc_scaled")
{
    CHECK(erfc_scaled(0.0) == 1.0);
    CHECK(erfc_scaled(1.0) == Approx(0.427583576155807004).epsilon(1e-14));
    CHECK(erfc_scaled(30.0) * 30.0 * std::sqrt(std::numbers::pi) == Approx(1.0).epsilon(1e-3));
    for (double x : {0.3, 2.0, 5.0, 26.0})
        CHECK(erfc_scaled(x) == Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-12));
}

TEST_CASE("cosine and sine integrals")
{
    CHECK(cosine_integral(1.0) == Approx(0.337403922900968135).epsilon(1e-14));
    CHECK(cosine_integral(2.0) == Approx(0.422980828774864996).epsilon(1e-14));
    CHECK(cosine_integral(1e-8) == Approx(euler_gamma + std::log(1e-8)).epsilon(1e-14));
    CHECK(cosine_integral(4.0 - 1e-12) == Approx(cosine_integral(4.0 + 1e-12)).epsilon(1e-12));
    CHECK(sine_integral(1e3) == Approx(std::numbers::pi / 2).epsilon(1e-2));
    CHECK_THROWS_AS(cosine_integral(0.0), DomainError);
}

TEST_CASE("bessel_k_half")
{
    CHECK(bessel_k_half(1.0) == Approx(std::sqrt(std::numbers::pi / 2) * std::exp(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(bessel_k_half(0.0), DomainError);
}

TEST_CASE("jacobi_theta_sum")
{
    CHECK(jacobi_theta_sum(1.0) == Approx(1.77263720482665215).epsilon(1e-14));
    for (double t : {0.05, 0.3, 1.0, 7.0}) {
        const double dual = std::sqrt(std::numbers::pi / t) * jacobi_theta_sum(std::numbers::pi * std::numbers::pi / t);
        CHECK(jacobi_theta_sum(t) == Approx(dual).epsilon(1e-12));
    }
    CHECK_THROWS_AS(jacobi_theta_sum(0.0), DomainError);
    CHECK_THROWS_AS(jacobi_theta_sum(1.0, Accuracy{-1.0, 1e-12}), DomainError);
}
