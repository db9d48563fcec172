#include "deltazeta/zetareg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "deltazeta/errors.hpp"
#include "deltazeta/specfun.hpp"

namespace deltazeta::zetareg {

namespace {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

// Beyond this the Gaussian weight exp(-y^2) underflows.
constexpr double gaussian_cutoff = 27.5;

template <class R>
auto checked(const R& r, const std::string& what)
{
    if (!r.converged) {
        double partial = 0.0;
        if constexpr (std::is_same_v<decltype(r.value), double>)
            partial = r.value;
        else
            partial = r.value.real();
        throw NonConvergenceError(what + ": quadrature did not converge", partial, r.error_estimate);
    }
    return r.value;
}

double density_or_limit(const SpectralMeasure& e, double v)
{
    return v > 0.0 ? e.eval(v) : e.small_v().constant;
}

// v^2 e(v), falling back to the large-v limit once v^2 overflows.
double weighted_tail(const SpectralMeasure& e, double v)
{
    if (!(v < 1e150)) return e.large_v().decay;
    return v * v * e.eval(v);
}

quad::QuadratureSpec with_splits(quad::QuadratureSpec spec, std::vector<double> splits)
{
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    spec.split_points = std::move(splits);
    spec.oscillation_period.reset();
    return spec;
}

cplx atom_zeta(double atom, cplx s)
{
    if (atom == 0.0 || s.real() < 0.0) return 0.0;
    if (s == cplx(0.0)) return atom;
    throw DomainError("zeta: point mass at v = 0 makes zeta infinite for Re s > 0");
}

// int_0^1 v^{-2s} e(v) dv, Re s < 1/2.
cplx lower_piece(const SpectralMeasure& e, cplx s, const quad::QuadratureSpec& spec)
{
    const double sigma = s.real();
    const double tau = s.imag();
    if (sigma > 0.0) {
        const double p = 1.0 / (1.0 - 2.0 * sigma);
        std::vector<double> splits;
        for (double c : e.scales())
            if (c < 1.0) splits.push_back(std::pow(c, 1.0 / p));
        auto f = [&](double w) -> cplx {
            const double v = std::pow(w, p);
            return p * std::polar(1.0, -2.0 * tau * p * std::log(w)) * density_or_limit(e, v);
        };
        return checked(quad::integrate_finite(quad::ComplexIntegrand(f), 0.0, 1.0, with_splits(spec, splits)),
                       "zeta on (0, 1)");
    }
    std::vector<double> splits;
    for (double c : e.scales())
        if (c < 1.0) splits.push_back(c);
    auto f = [&](double v) -> cplx { return std::exp(-2.0 * s * std::log(v)) * e.eval(v); };
    return checked(quad::integrate_finite(quad::ComplexIntegrand(f), 0.0, 1.0, with_splits(spec, splits)),
                   "zeta on (0, 1)");
}

// int_1^inf v^{-2s} e(v) dv, Re s > -1/2.
cplx upper_piece(const SpectralMeasure& e, cplx s, const quad::QuadratureSpec& spec)
{
    const auto& large = e.large_v();
    if (large.oscillatory()) {
        auto f = [&](double v) -> cplx { return std::exp(-2.0 * s * std::log(v)) * e.eval(v); };
        auto osc = spec;
        osc.split_points.clear();
        osc.oscillation_period = large.period();
        return checked(quad::integrate_to_infinity(quad::ComplexIntegrand(f), 1.0, osc), "zeta on (1, inf)");
    }
    const double q = 1.0 / (2.0 * s.real() + 1.0);
    const double tau = s.imag();
    std::vector<double> splits;
    for (double c : e.scales())
        if (c > 1.0) splits.push_back(std::pow(c, -1.0 / q));
    auto f = [&](double w) -> cplx {
        const double v = std::pow(w, -q);
        return q * std::polar(1.0, 2.0 * tau * q * std::log(w)) * weighted_tail(e, v);
    };
    return checked(quad::integrate_finite(quad::ComplexIntegrand(f), 0.0, 1.0, with_splits(spec, splits)),
                   "zeta on (1, inf)");
}

double heat_trace_density_part(const SpectralMeasure& e, double t, const quad::QuadratureSpec& spec)
{
    const double rt = std::sqrt(t);
    std::vector<double> splits{1.0};
    for (double c : e.scales()) {
        for (double y = c * rt; y < gaussian_cutoff; y *= 4.0) splits.push_back(y);
    }
    if (e.large_v().oscillatory()) splits.push_back(e.large_v().period() * rt);
    auto f = [&](double y) { return std::exp(-y * y) * e.eval(y / rt); };
    const auto r = quad::integrate_finite(quad::Integrand(f), 0.0, gaussian_cutoff, with_splits(spec, splits));
    return checked(r, "heat trace") / rt;
}

double richardson(double coarse, double fine, double ratio_power)
{
    return (ratio_power * fine - coarse) / (ratio_power - 1.0);
}

}  // namespace

quad::QuadratureSpec precise_spec()
{
    quad::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-11;
    spec.max_subdivisions = 4000;
    return spec;
}

ZetaStrip zeta_strip(const SpectralMeasure& e)
{
    // e(v) ~ v^p at 0 and ~ v^{-2} at infinity.
    return {-0.5, 0.5 * (e.small_v().exponent + 1.0)};
}

double relative_heat_trace(const SpectralMeasure& e, double t, const quad::QuadratureSpec& spec)
{
    if (!(t > 0.0) || std::isnan(t)) throw DomainError("heat trace: t must be positive");
    if (std::isinf(t)) return e.atom_at_origin();
    return e.atom_at_origin() + heat_trace_density_part(e, t, spec);
}

double one_point_heat_trace_closed(const models::OnePointModel& m, double t)
{
    m.validate();
    if (!(t > 0.0) || std::isnan(t)) throw DomainError("heat trace: t must be positive");
    const double c = 4.0 * pi * m.alpha;
    return 0.5 * specfun::erfc_scaled(c * std::sqrt(t));
}

cplx relative_zeta_in_strip(const SpectralMeasure& e, cplx s, const quad::QuadratureSpec& spec)
{
    spec.validate();
    const ZetaStrip strip = zeta_strip(e);
    if (!(std::isfinite(s.real()) && std::isfinite(s.imag())) || !strip.contains(s.real()))
        throw ContinuationRequiredError("zeta: Re s = " + std::to_string(s.real()) +
                                        " lies outside the convergence strip (-1/2, 1/2)");
    cplx value = atom_zeta(e.atom_at_origin(), s);
    if (e.small_v().constant != 0.0 || e.large_v().decay != 0.0)
        value += lower_piece(e, s, spec) + upper_piece(e, s, spec);
    if (s.imag() == 0.0) {
        if (std::abs(value.imag()) > 1e-12)
            throw NumericalError("zeta: imaginary residue " + std::to_string(value.imag()) + " for real s");
        value.imag(0.0);
    }
    return value;
}

double relative_zeta_mellin(const SpectralMeasure& e, double s, const quad::QuadratureSpec& spec)
{
    spec.validate();
    if (!(s > 0.0 && s < 0.5)) throw ContinuationRequiredError("Mellin zeta: requires 0 < s < 1/2");
    if (e.atom_at_origin() != 0.0) throw DomainError("Mellin zeta: point mass at v = 0");
    const auto inner = precise_spec();
    const double e0 = e.small_v().constant;

    auto heat = [&](double t) { return heat_trace_density_part(e, t, inner); };

    auto near = [&](double w) {
        const double t = std::max(std::pow(w, 1.0 / s), std::numeric_limits<double>::min());
        return heat(t) / s;
    };
    const double q = 1.0 / (0.5 - s);
    auto far = [&](double w) {
        const double t = std::pow(w, -q);
        if (!(t < 1e300)) return q * e0 * std::sqrt(pi) / 2.0;
        return q * std::sqrt(t) * heat(t);
    };
    auto outer = spec;
    outer.split_points.clear();
    outer.oscillation_period.reset();
    const double a = checked(quad::integrate_finite(quad::Integrand(near), 0.0, 1.0, outer), "Mellin on (0, 1)");
    const double b = checked(quad::integrate_finite(quad::Integrand(far), 0.0, 1.0, outer), "Mellin on (1, inf)");
    return (a + b) / std::tgamma(s);
}

cplx one_point_zeta_closed(const models::OnePointModel& m, cplx s)
{
    m.validate();
    const double pole = std::floor(s.real()) + 0.5;
    if (std::abs(s - cplx(pole)) < 1e-12)
        throw PoleError("one-point zeta: pole at s = " + std::to_string(pole), pole);
    if (m.alpha == 0.0) return atom_zeta(0.5, s);
    const double c = 4.0 * pi * m.alpha;
    return 0.5 * std::exp(-2.0 * s * std::log(c)) / std::cos(pi * s);
}

LaurentData one_point_laurent(const models::OnePointModel& m)
{
    m.validate();
    if (m.alpha == 0.0) return {0.0, 0.0, "degenerate model alpha = 0: no pole at s = -1/2"};
    return {2.0 * m.alpha, -4.0 * m.alpha * std::log(4.0 * pi * m.alpha), ""};
}

TwoPointLaurentParts two_point_laurent_parts(const models::TwoPointModel& m, const quad::QuadratureSpec& spec)
{
    spec.validate();
    const auto e = models::two_point_spectral_measure(m);
    TwoPointLaurentParts parts;

    std::vector<double> splits;
    for (double c : e.scales())
        if (c < 1.0) splits.push_back(c);
    auto low = [&](double v) { return v * e.eval(v); };
    parts.zeta0 = checked(quad::integrate_finite(quad::Integrand(low), 0.0, 1.0, with_splits(spec, splits)),
                          "zeta0 = int_0^1 v e(v) dv");

    // z_A = int_1^inf v (e - profile) dv. The one-point shares integrate in closed form,
    // int_1^inf v cos(2av)/v^2 dv = -Ci(2a), and int_1^inf v Im K(v) dv is taken along v = 1 + iy.
    double one_point_shares = 0.0;
    for (double alpha : {m.alpha0, m.alpha1}) {
        const double c = 4.0 * pi * alpha;
        one_point_shares -= 2.0 * alpha * std::log1p(c * c);
    }
    auto rotated = [&](double y) {
        const std::complex<double> v(1.0, y);
        return (std::complex<double>(0.0, 1.0) * v * models::two_point_interaction_kernel(m, v)).imag();
    };
    auto tail = spec;
    tail.split_points.clear();
    for (double c : {0.5 / m.a, 2.0 / m.a, 8.0 / m.a}) tail.split_points.push_back(c);
    const double cutoff = 40.0 / m.a;
    const auto r = quad::integrate_finite(quad::Integrand(rotated), 0.0, cutoff, tail);
    const double interaction = checked(r, "z_A interaction share along 1 + iy");
    parts.z_a = one_point_shares + e.large_v().oscillation * specfun::cosine_integral(2.0 * m.a) + interaction;

    parts.z_b_residue = 2.0 * (m.alpha0 + m.alpha1);
    parts.z_b_finite = 2.0 * specfun::cosine_integral(2.0 * m.a) / (pi * m.a);
    return parts;
}

LaurentData two_point_laurent(const models::TwoPointModel& m, const quad::QuadratureSpec& spec)
{
    const auto parts = two_point_laurent_parts(m, spec);
    std::string note;
    if (m.on_constraint_boundary()) note = "model on the boundary 4 pi^2 alpha0 alpha1 a^2 = 1";
    return {parts.z_b_residue, parts.zeta0 + parts.z_a + parts.z_b_finite, note};
}

double two_point_interaction_finite_part(const models::TwoPointModel& m, const quad::QuadratureSpec& spec)
{
    m.validate();
    spec.validate();
    const double b0 = 4.0 * pi * m.alpha0 * m.a;
    const double b1 = 4.0 * pi * m.alpha1 * m.a;
    auto f = [=](double y) { return std::log1p(-std::exp(-2.0 * y) / ((b0 + y) * (b1 + y))); };
    const double value = checked(quad::integrate_finite(quad::Integrand(f), 0.0, 400.0,
                                                        with_splits(spec, {0.5, 2.0, 8.0, 32.0})),
                                 "interaction finite part");
    return value / (pi * m.a);
}

LaurentData two_point_laurent_imaginary_axis(const models::TwoPointModel& m, const quad::QuadratureSpec& spec)
{
    const double self = -4.0 * m.alpha0 * std::log(4.0 * pi * m.alpha0) -
                        4.0 * m.alpha1 * std::log(4.0 * pi * m.alpha1);
    return {2.0 * (m.alpha0 + m.alpha1), self + two_point_interaction_finite_part(m, spec), ""};
}

double continued_zeta(const SpectralMeasure& e, double s, const quad::QuadratureSpec& spec)
{
    spec.validate();
    if (!(s > -1.0 && s < 0.5) || s == -0.5)
        throw ContinuationRequiredError("continued zeta: requires -1 < s < 1/2, s != -1/2");
    double value = atom_zeta(e.atom_at_origin(), s).real();
    if (e.small_v().constant == 0.0 && e.large_v().decay == 0.0) return value;

    value += lower_piece(e, s, spec).real();

    const auto& large = e.large_v();
    auto rest = [&](double v) { return std::pow(v, -2.0 * s) * e.residual(v); };
    auto tail_spec = spec;
    tail_spec.split_points.clear();
    if (large.oscillatory())
        tail_spec.oscillation_period = large.period();
    else
        tail_spec.oscillation_period.reset();
    value += checked(quad::integrate_to_infinity(quad::Integrand(rest), 1.0, tail_spec),
                     "continued zeta remainder");

    value += large.decay / (2.0 * s + 1.0);
    if (large.oscillatory()) {
        const double w = large.frequency;
        auto wave = [&](double v) { return std::pow(v, -2.0 * s - 2.0) * std::cos(w * v); };
        value += large.oscillation * checked(quad::integrate_to_infinity(quad::Integrand(wave), 1.0, tail_spec),
                                             "continued zeta oscillatory profile");
    }
    return value;
}

LaurentData numeric_laurent_probe(const SpectralMeasure& e, double tol, const quad::QuadratureSpec& spec)
{
    constexpr std::array<double, 3> deltas = {0.04, 0.02, 0.01};
    std::array<double, 3> res{};
    std::array<double, 3> fin{};
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        const double d = deltas[i];
        const double up = continued_zeta(e, -0.5 + d, spec);
        const double down = continued_zeta(e, -0.5 - d, spec);
        res[i] = 0.5 * (up - down) * d;
        fin[i] = 0.5 * (up + down);
    }
    auto extrapolate = [&](const std::array<double, 3>& x, const char* what) {
        const double r1a = richardson(x[0], x[1], 4.0);
        const double r1b = richardson(x[1], x[2], 4.0);
        const double r2 = richardson(r1a, r1b, 16.0);
        if (!(std::abs(r2 - r1b) <= tol * std::max(1.0, std::abs(r2))))
            throw ExtrapolationError(std::string("Laurent probe: ") + what + " extrapolation orders disagree",
                                     r1b, r2);
        return r2;
    };
    return {extrapolate(res, "residue"), extrapolate(fin, "finite part"), ""};
}

}  // namespace deltazeta::zetareg
