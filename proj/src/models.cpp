#include "deltazeta/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "deltazeta/errors.hpp"

namespace deltazeta::models {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

void check_sheet(cplx k)
{
    if (!(std::isfinite(k.real()) && std::isfinite(k.imag())))
        throw DomainError("resolvent trace: k must be finite");
    if (!(k.imag() > 0.0)) throw WrongSheetError("resolvent trace: requires Im k > 0");
}

double one_point_density(double alpha, double v)
{
    const double c = 4.0 * pi * alpha;
    return 4.0 * alpha / (c * c + v * v);
}

// 4 alpha / (c^2 + v^2) - 4 alpha / v^2
double one_point_residual(double alpha, double v)
{
    const double c = 4.0 * pi * alpha;
    return -4.0 * alpha * c * c / (v * v * (c * c + v * v));
}

cplx interaction_kernel(double a, double b0, double b1, cplx v)
{
    const cplx x = a * v;
    const cplx d0 = b0 - I * x;
    const cplx d1 = b1 - I * x;
    const cplx w = std::exp(2.0 * I * x) / (d0 * d1);
    const cplx wx = w * I * (2.0 + 1.0 / d0 + 1.0 / d1);
    return a / pi * (wx / (1.0 - w));
}

double interaction_density(double a, double b0, double b1, double v)
{
    const double x = a * v;
    const cplx d0(b0, -x);
    const cplx d1(b1, -x);
    const cplx w = std::polar(1.0, 2.0 * x) / (d0 * d1);
    const cplx wx = w * I * (2.0 + 1.0 / d0 + 1.0 / d1);
    return a / pi * (wx / (1.0 - w)).imag();
}

}  // namespace

void OnePointModel::validate() const
{
    if (!std::isfinite(alpha)) throw DomainError("one-point model: alpha must be finite");
    if (alpha < 0.0) throw BoundStateError("one-point model: alpha < 0 has a bound state");
}

double TwoPointModel::constraint_value() const
{
    return 4.0 * pi * pi * alpha0 * alpha1 * a * a;
}

void TwoPointModel::validate() const
{
    if (!(std::isfinite(alpha0) && std::isfinite(alpha1)))
        throw DomainError("two-point model: couplings must be finite");
    if (!(std::isfinite(a) && a > 0.0)) throw DomainError("two-point model: separation a must be positive");
    if (!(alpha0 > 0.0 && alpha1 > 0.0))
        throw BoundStateError("two-point model: couplings must be positive");
    const double c = constraint_value();
    if (c < 1.0 && !on_constraint_boundary())
        throw BoundStateError("two-point model: 4 pi^2 alpha0 alpha1 a^2 = " + std::to_string(c) +
                              " < 1 (bound state regime)");
}

bool TwoPointModel::on_constraint_boundary() const
{
    return std::abs(constraint_value() - 1.0) <= 1e-12;
}

double LargeVProfile::operator()(double v) const
{
    const double osc = oscillatory() ? oscillation * std::cos(frequency * v) : 0.0;
    return (decay + osc) / (v * v);
}

double LargeVProfile::period() const
{
    return 2.0 * pi / frequency;
}

SpectralMeasure::SpectralMeasure(Density density, Density residual, SmallVProfile small,
                                 LargeVProfile large, std::vector<double> scales, std::string tag,
                                 double atom_at_origin)
    : density_(std::move(density)),
      residual_(std::move(residual)),
      small_(small),
      large_(large),
      scales_(std::move(scales)),
      tag_(std::move(tag)),
      atom_(atom_at_origin)
{
}

double SpectralMeasure::eval(double v) const
{
    if (!(std::isfinite(v) && v > 0.0)) throw DomainError("spectral measure: v must be positive and finite");
    return density_(v);
}

double SpectralMeasure::residual(double v) const
{
    if (!(std::isfinite(v) && v > 0.0)) throw DomainError("spectral measure: v must be positive and finite");
    return residual_(v);
}

cplx one_point_resolvent_trace(const OnePointModel& m, cplx k)
{
    m.validate();
    check_sheet(k);
    return 1.0 / (2.0 * I * k * (4.0 * pi * m.alpha - I * k));
}

cplx two_point_resolvent_trace(const TwoPointModel& m, cplx k)
{
    m.validate();
    check_sheet(k);
    const double a = m.a;
    const cplx ika = I * k * a;
    const cplx e2 = std::exp(2.0 * ika);
    const cplx num = 2.0 * pi * (m.alpha0 + m.alpha1) * a - ika + e2;
    const cplx den = (4.0 * pi * m.alpha0 * a - ika) * (4.0 * pi * m.alpha1 * a - ika) - e2;
    if (std::abs(den) == 0.0) throw SingularPointError("two-point resolvent trace: singular point");
    return a / (I * k) * num / den;
}

ResolventPoint resolvent_point(const OnePointModel& m, cplx k)
{
    return {k, one_point_resolvent_trace(m, k)};
}

ResolventPoint resolvent_point(const TwoPointModel& m, cplx k)
{
    return {k, two_point_resolvent_trace(m, k)};
}

double measure_from_trace(const std::function<cplx(cplx)>& trace, double v, double eps)
{
    const cplx lower = trace(cplx(-v, eps));
    const cplx upper = trace(cplx(v, eps));
    return (v / (pi * I) * (lower - upper)).real();
}

SpectralMeasure one_point_spectral_measure(const OnePointModel& m)
{
    m.validate();
    const double alpha = m.alpha;
    const std::string tag = "one-point alpha=" + std::to_string(alpha);
    if (alpha == 0.0) {
        auto zero = [](double) { return 0.0; };
        return SpectralMeasure(zero, zero, {0.0, 0.0}, {0.0, 0.0, 0.0}, {}, tag, 0.5);
    }
    const double c = 4.0 * pi * alpha;
    return SpectralMeasure([alpha](double v) { return one_point_density(alpha, v); },
                           [alpha](double v) { return one_point_residual(alpha, v); },
                           {1.0 / (4.0 * pi * pi * alpha), 0.0}, {4.0 * alpha, 0.0, 0.0}, {c}, tag);
}

SpectralMeasure two_point_spectral_measure(const TwoPointModel& m)
{
    m.validate();
    const double a = m.a;
    const double a0 = m.alpha0;
    const double a1 = m.alpha1;
    const double b0 = 4.0 * pi * a0 * a;
    const double b1 = 4.0 * pi * a1 * a;
    const double sum = a0 + a1;
    const LargeVProfile large{4.0 * sum, -2.0 / (pi * a), 2.0 * a};
    const SmallVProfile small{a / pi * (4.0 * pi * sum * a + 2.0) / (16.0 * pi * pi * a0 * a1 * a * a - 1.0), 0.0};

    auto density = [=](double v) {
        return one_point_density(a0, v) + one_point_density(a1, v) + interaction_density(a, b0, b1, v);
    };
    auto residual = [=](double v) {
        const double osc = large.oscillation * std::cos(large.frequency * v) / (v * v);
        return one_point_residual(a0, v) + one_point_residual(a1, v) + (interaction_density(a, b0, b1, v) - osc);
    };
    std::vector<double> scales{b0 / a, b1 / a, 1.0 / a};
    std::sort(scales.begin(), scales.end());
    const std::string tag = "two-point alpha0=" + std::to_string(a0) + " alpha1=" + std::to_string(a1) +
                            " a=" + std::to_string(a);
    return SpectralMeasure(density, residual, small, large, scales, tag);
}

cplx two_point_interaction_kernel(const TwoPointModel& m, cplx v)
{
    m.validate();
    if (v.imag() < 0.0) throw WrongSheetError("interaction kernel: requires Im v >= 0");
    return interaction_kernel(m.a, 4.0 * pi * m.alpha0 * m.a, 4.0 * pi * m.alpha1 * m.a, v);
}

double two_point_measure_direct(const TwoPointModel& m, double v)
{
    m.validate();
    const double a = m.a;
    const cplx ika = I * v * a;
    const cplx e2 = std::exp(2.0 * ika);
    const cplx num = 2.0 * pi * (m.alpha0 + m.alpha1) * a - ika + e2;
    const cplx den = (4.0 * pi * m.alpha0 * a - ika) * (4.0 * pi * m.alpha1 * a - ika) - e2;
    return 2.0 * a / pi * (num / den).real();
}

}  // namespace deltazeta::models
