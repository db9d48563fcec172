#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "deltazeta/errors.hpp"
#include "deltazeta/specfun.hpp"
#include "deltazeta/zetareg.hpp"

using namespace deltazeta;
using namespace deltazeta::zetareg;
using models::OnePointModel;
using models::TwoPointModel;
using doctest::Approx;
using std::numbers::pi;

TEST_CASE("heat trace")
{
    const OnePointModel m{0.25};
    const auto e = models::one_point_spectral_measure(m);
    for (double t : {0.01, 0.1, 1.0, 10.0}) CHECK(std::abs(relative_heat_trace(e, t) - one_point_heat_trace_closed(m, t)) < 1e-8);
    CHECK(relative_heat_trace(e, 1e-10) == Approx(0.5).epsilon(1e-4));
    const OnePointModel unit{1.0 / (4 * pi)};
    CHECK(one_point_heat_trace_closed(unit, 1.0) == Approx(0.5 * specfun::erfc_scaled(1.0)).epsilon(1e-15));
    CHECK(one_point_heat_trace_closed(unit, 1.0) == Approx(0.5 * 0.427583576155807004).epsilon(1e-14));
    CHECK(one_point_heat_trace_closed({0.0}, 3.0) == 0.5);
    CHECK(relative_heat_trace(models::one_point_spectral_measure({0.0}), 3.0) == 0.5);
    const double alpha = 0.3;
    const double c = 4 * pi * alpha;
    const double t = std::pow(50.0 / c, 2);
    CHECK(one_point_heat_trace_closed({alpha}, t) == Approx(1.0 / (8 * pi * alpha * std::sqrt(pi * t))).epsilon(1e-3));
    for (double a : {0.1, 1.0, 3.0})
        for (double tt : {1e-3, 0.05, 2.0}) {
            const OnePointModel mm{a};
            CHECK(std::abs(relative_heat_trace(models::one_point_spectral_measure(mm), tt) -
                           one_point_heat_trace_closed(mm, tt)) < 1e-8);
        }
    CHECK_THROWS_AS(relative_heat_trace(e, 0.0), DomainError);
}

TEST_CASE("one-point zeta in the strip")
{
    const auto e = models::one_point_spectral_measure({0.25});
    CHECK(relative_zeta_in_strip(e, 0.0).real() == Approx(0.5).epsilon(1e-10));
    CHECK(relative_zeta_in_strip(e, 0.25).real() == Approx(0.5 / std::sqrt(pi) / std::cos(pi / 4)).epsilon(1e-10));
    CHECK(one_point_zeta_closed({0.25}, 0.0).real() == 0.5);
    CHECK(one_point_zeta_closed({1.0 / (4 * pi)}, 0.25).real() == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(one_point_zeta_closed({0.25}, -0.5), PoleError);
    CHECK_THROWS_AS(relative_zeta_in_strip(e, 0.5), ContinuationRequiredError);
    CHECK_THROWS_AS(relative_zeta_in_strip(e, -0.6), ContinuationRequiredError);

    std::mt19937 rng(20240611);
    std::uniform_real_distribution<double> dist(-0.45, 0.45);
    for (double alpha : {0.1, 1.0}) {
        const OnePointModel m{alpha};
        const auto ea = models::one_point_spectral_measure(m);
        for (int i = 0; i < 20; ++i) {
            const double s = dist(rng);
            CHECK(std::abs(relative_zeta_in_strip(ea, s).real() - one_point_zeta_closed(m, s).real()) < 1e-7);
        }
    }
    const std::complex<double> s{0.2, 0.7};
    CHECK(std::abs(relative_zeta_in_strip(e, s) - one_point_zeta_closed({0.25}, s)) < 1e-8);

    const auto zero = models::one_point_spectral_measure({0.0});
    CHECK(relative_zeta_in_strip(zero, 0.0).real() == 0.5);
    CHECK(relative_zeta_in_strip(zero, -0.2).real() == 0.0);
    CHECK_THROWS_AS(relative_zeta_in_strip(zero, 0.2), DomainError);
}

TEST_CASE("Mellin transform of the heat trace")
{
    const auto e = models::one_point_spectral_measure({0.25});
    for (double s : {0.1, 0.25, 0.4})
        CHECK(std::abs(relative_zeta_mellin(e, s) - relative_zeta_in_strip(e, s).real()) < 1e-6);
}

TEST_CASE("one-point Laurent data")
{
    CHECK(one_point_laurent({0.25}).residue == 0.5);
    CHECK(one_point_laurent({1.0 / (4 * pi)}).finite_part == Approx(0.0).epsilon(1e-15));
    CHECK(one_point_laurent({1.0}).finite_part == Approx(-10.1240969878771632).epsilon(1e-14));
    const auto zero = one_point_laurent({0.0});
    CHECK(zero.residue == 0.0);
    CHECK(zero.finite_part == 0.0);
    CHECK_FALSE(zero.note.empty());

    const auto p = numeric_laurent_probe(models::one_point_spectral_measure({0.25}));
    CHECK(p.residue == Approx(0.5).epsilon(1e-5));
    CHECK(std::abs(p.finite_part - one_point_laurent({0.25}).finite_part) < 1e-4);
    const auto q = numeric_laurent_probe(models::one_point_spectral_measure({1.0 / (4 * pi)}));
    CHECK(std::abs(q.finite_part) < 1e-5);
    CHECK(std::abs(q.residue - 2.0 / (4 * pi)) < 1e-5);
}

TEST_CASE("continued zeta below the strip")
{
    const OnePointModel m{0.25};
    const auto e = models::one_point_spectral_measure(m);
    for (double s : {-0.9, -0.7, -0.3, 0.2})
        CHECK(continued_zeta(e, s) == Approx(one_point_zeta_closed(m, s).real()).epsilon(1e-8));
    CHECK_THROWS_AS(continued_zeta(e, -0.5), DomainError);
}

TEST_CASE("two-point zeta and Laurent data")
{
    const TwoPointModel m{1.0, 1.0, 1.0};
    const auto e = models::two_point_spectral_measure(m);
    CHECK(relative_zeta_in_strip(e, 0.0).real() == Approx(1.0).epsilon(1e-10));

    const auto parts = two_point_laurent_parts(m);
    CHECK(parts.zeta0 == Approx(0.0254613259177432336).epsilon(1e-10));
    CHECK(parts.z_a == Approx(-20.5438706981724671).epsilon(1e-11));
    CHECK(parts.z_b_residue == 4.0);

    const auto l = two_point_laurent(m);
    CHECK(l.residue == 4.0);
    CHECK(l.finite_part == Approx(-20.2491314133242184).epsilon(1e-11));
    CHECK(l.finite_part == Approx(parts.zeta0 + parts.z_a + parts.z_b_finite).epsilon(1e-15));
    const auto axis = two_point_laurent_imaginary_axis(m);
    CHECK(axis.residue == 4.0);
    CHECK(axis.finite_part == Approx(-20.2491314133242184).epsilon(1e-12));

    const auto p = numeric_laurent_probe(e);
    CHECK(std::abs(p.residue - 4.0) < 1e-4);
    CHECK(std::abs(p.finite_part - l.finite_part) < 1e-4);

    CHECK(two_point_laurent({0.25, 1e4, 1.0}).residue == 2e4 + 0.5);
}

TEST_CASE("two-point finite part degenerates to the one-point structure")
{
    const double expected[] = {-3.53136236702911e-5, -3.53228450272400e-6, -3.53237679091290e-7};
    double prev = 1.0;
    int i = 0;
    for (double alpha1 : {1e2, 1e3, 1e4}) {
        const TwoPointModel m{0.25, alpha1, 1.0};
        const double interaction = two_point_interaction_finite_part(m);
        CHECK(interaction == Approx(expected[i++]).epsilon(1e-8));
        const double rest = two_point_laurent_imaginary_axis(m).finite_part - one_point_laurent({alpha1}).finite_part;
        const double gap = std::abs(rest - one_point_laurent({0.25}).finite_part);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 1e-6);
}
