#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "deltazeta/errors.hpp"
#include "deltazeta/models.hpp"

using namespace deltazeta;
using namespace deltazeta::models;
using doctest::Approx;
using std::numbers::pi;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("one-point resolvent trace")
{
    CHECK(std::abs(one_point_resolvent_trace({0.0}, I) - cplx(-0.5, 0.0)) < 1e-15);
    CHECK(std::abs(one_point_resolvent_trace({1.0 / (4 * pi)}, I) - cplx(-0.25, 0.0)) < 1e-15);
    const cplx r = one_point_resolvent_trace({0.25}, {0.3, 0.7});
    CHECK(r.real() == Approx(-0.150905259242137591).epsilon(1e-14));
    CHECK(r.imag() == Approx(-0.0791058018980331552).epsilon(1e-14));
    CHECK_THROWS_AS(one_point_resolvent_trace({0.25}, {1.0, -0.5}), WrongSheetError);
    CHECK_THROWS_AS(one_point_resolvent_trace({-0.1}, I), BoundStateError);
    const auto p = resolvent_point(OnePointModel{0.25}, I);
    CHECK(p.k == I);
}

TEST_CASE("two-point resolvent trace")
{
    const TwoPointModel m{1.0, 1.0, 1.0};
    const cplx r = two_point_resolvent_trace(m, I);
    CHECK(r.real() == Approx(-0.0745017981981587039).epsilon(1e-13));
    CHECK(std::abs(r.imag()) < 1e-15);
    for (cplx k : {cplx(0.3, 0.2), cplx(-2.0, 0.5), cplx(0.0, 3.0)}) {
        const cplx a = two_point_resolvent_trace({0.4, 2.0, 0.7}, k);
        const cplx b = two_point_resolvent_trace({2.0, 0.4, 0.7}, k);
        CHECK(std::abs(a - b) <= 1e-15 * std::abs(a));
    }
    const cplx far = two_point_resolvent_trace({0.25, 1e6, 1.0}, I);
    const cplx one = one_point_resolvent_trace({0.25}, I);
    CHECK(std::abs(far - one) < 1e-4 * std::abs(one));
    CHECK_THROWS_AS(two_point_resolvent_trace(m, {1.0, -1.0}), WrongSheetError);
}

TEST_CASE("model validation")
{
    CHECK_NOTHROW(OnePointModel{0.0}.validate());
    CHECK_THROWS_AS(OnePointModel{-1e-3}.validate(), BoundStateError);
    CHECK_THROWS_AS((TwoPointModel{0.01, 0.01, 1.0}.validate()), BoundStateError);
    CHECK_THROWS_AS((TwoPointModel{1.0, 1.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((TwoPointModel{0.0, 1.0, 1.0}.validate()), DomainError);
    const double a = 1.0 / (2 * pi);
    const TwoPointModel edge{1.0, 1.0, a};
    CHECK(edge.constraint_value() == Approx(1.0).epsilon(1e-14));
    CHECK(edge.on_constraint_boundary());
    CHECK_NOTHROW(edge.validate());
    CHECK_FALSE(TwoPointModel{}.on_constraint_boundary());
}

TEST_CASE("one-point spectral measure")
{
    const auto e = one_point_spectral_measure({1.0 / (4 * pi)});
    CHECK(e.small_v().constant == Approx(1.0 / pi).epsilon(1e-15));
    CHECK(e.eval(1e-9) == Approx(1.0 / pi).epsilon(1e-12));
    CHECK(one_point_spectral_measure({0.25}).eval(1.0) == Approx(0.0919996683503752325).epsilon(1e-13));
    CHECK_THROWS_AS(e.eval(0.0), DomainError);
    CHECK_THROWS_AS(e.eval(-1.0), DomainError);

    const auto zero = one_point_spectral_measure({0.0});
    CHECK(zero.eval(0.5) == 0.0);
    CHECK(zero.eval(50.0) == 0.0);
    CHECK(zero.atom_at_origin() == 0.5);
}

TEST_CASE("measure from the two rims of the trace")
{
    const OnePointModel m{0.25};
    const auto e = one_point_spectral_measure(m);
    auto trace = [&](cplx k) { return one_point_resolvent_trace(m, k); };
    CHECK(std::abs(measure_from_trace(trace, 0.2, 1e-6) - e.eval(0.2)) < 1e-6);
    for (double v : {1.0, 5.0}) {
        const double d4 = measure_from_trace(trace, v, 1e-4) - e.eval(v);
        const double d6 = measure_from_trace(trace, v, 1e-6) - e.eval(v);
        CHECK(std::abs(d6) < 1e-6);
        CHECK(std::abs(d6) < std::abs(d4));
        CHECK(std::abs(d4 / d6) == Approx(100.0).epsilon(0.05));
        // linear extrapolation in eps
        CHECK(std::abs(d6 - (d4 - d6) / 99.0) < 1e-9);
    }
    const TwoPointModel two{1.0, 1.0, 1.0};
    auto trace2 = [&](cplx k) { return two_point_resolvent_trace(two, k); };
    const auto e2 = two_point_spectral_measure(two);
    for (double v : {0.3, 2.0, 7.0}) CHECK(std::abs(measure_from_trace(trace2, v, 1e-6) - e2.eval(v)) < 1e-6);
}

TEST_CASE("two-point spectral measure")
{
    const TwoPointModel m{1.0, 1.0, 1.0};
    const auto e = two_point_spectral_measure(m);
    CHECK(e.small_v().constant == Approx(0.0550405821837702575).epsilon(1e-13));
    CHECK(e.small_v().constant == Approx((8 * pi + 2) / (16 * pi * pi - 1) / pi).epsilon(1e-13));
    CHECK(e.eval(1e-7) == Approx(0.0550405821837702575).epsilon(1e-9));
    for (double v : {1e-3, 0.5, 3.0, 40.0, 900.0})
        CHECK(e.eval(v) == Approx(two_point_measure_direct(m, v)).epsilon(1e-10));

    const auto swapped = two_point_spectral_measure({3.0, 0.5, 0.8});
    const auto orig = two_point_spectral_measure({0.5, 3.0, 0.8});
    for (double v : {0.1, 1.0, 10.0, 100.0}) CHECK(swapped.eval(v) == orig.eval(v));

    const auto& large = e.large_v();
    CHECK(large.decay == Approx(8.0));
    CHECK(large.oscillation == Approx(-2.0 / pi));
    CHECK(large.frequency == Approx(2.0));
    CHECK(large.period() == Approx(pi).epsilon(1e-15));
    CHECK(large.oscillatory());
    double worst = 0.0;
    for (double v = 10.0; v <= 1000.0; v *= 1.07) worst = std::max(worst, std::abs(e.eval(v) - large(v)) * v * v * v);
    // frozen regression bound on C in |e - profile| <= C / v^3
    CHECK(worst < 75.0);
    CHECK(std::abs(e.residual(500.0)) < 75.0 / (500.0 * 500.0 * 500.0));
}

TEST_CASE("degeneracy to the one-point model")
{
    const auto one = one_point_spectral_measure({0.25});
    double prev = 1.0;
    for (double alpha1 : {1e2, 1e3, 1e4}) {
        const auto e = two_point_spectral_measure({0.25, alpha1, 1.0});
        double worst = 0.0;
        for (double v : {0.1, 1.0, 10.0}) worst = std::max(worst, std::abs(e.eval(v) - one.eval(v)));
        CHECK(worst < prev);
        prev = worst;
    }
    CHECK(prev < 1e-3);
}
