#include "deltazeta/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "deltazeta/errors.hpp"
#include "deltazeta/specfun.hpp"

namespace deltazeta::thermo {

namespace {

constexpr double pi = std::numbers::pi;
// exp(-y) underflows past this.
constexpr double exp_cutoff = 760.0;
// exp(-y) is below double resolution relative to the integral past this.
constexpr double laplace_cutoff = 60.0;

double checked(const quad::QuadratureResult& r, const std::string& what)
{
    if (!r.converged) throw NonConvergenceError(what + ": quadrature did not converge", r.value, r.error_estimate);
    return r.value;
}

double log_one_minus_exp(double y)
{
    return y < std::numbers::ln2 ? std::log(-std::expm1(-y)) : std::log1p(-std::exp(-y));
}

quad::QuadratureSpec with_splits(quad::QuadratureSpec spec, std::vector<double> splits)
{
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    spec.split_points = std::move(splits);
    spec.oscillation_period.reset();
    return spec;
}

// Breakpoints in y = scale_factor * v covering the features of e.
std::vector<double> feature_splits(const SpectralMeasure& e, double scale_factor, double lo, double hi)
{
    std::vector<double> splits;
    for (double c : e.scales())
        for (double y = c * scale_factor; y < hi; y *= 4.0)
            if (y > lo) splits.push_back(y);
    if (e.large_v().oscillatory()) {
        const double p = e.large_v().period() * scale_factor;
        for (double y = p; y < std::min(hi, 64.0 * p + lo); y += p)
            if (y > lo) splits.push_back(y);
    }
    return splits;
}

// int_0^inf e^{-x v} e(v) dv
double laplace(const SpectralMeasure& e, double x, const quad::QuadratureSpec& spec)
{
    auto f = [&](double y) { return std::exp(-y) * e.eval(y / x); };
    auto splits = feature_splits(e, x, 0.0, laplace_cutoff);
    splits.push_back(1.0);
    return checked(quad::integrate_finite(quad::Integrand(f), 0.0, laplace_cutoff, with_splits(spec, splits)),
                   "Laplace transform of e(v)") / x;
}

double neville_at_zero(const std::vector<double>& h, std::vector<double> y)
{
    const std::size_t n = h.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            y[i] = (h[i + m] * y[i] - h[i] * y[i + 1]) / (h[i + m] - h[i]);
    return y[0];
}

void check_tau(double tau)
{
    if (!(std::isfinite(tau) && tau > 0.0)) throw DomainError("eta: tau must be positive and finite");
}

}  // namespace

double ThermalState::r() const
{
    return beta / (2.0 * pi);
}

void ThermalState::validate() const
{
    if (!(std::isfinite(beta) && beta > 0.0)) throw DomainError("thermal state: beta must be positive");
    if (!(std::isfinite(ell) && ell > 0.0)) throw DomainError("thermal state: ell must be positive");
}

double log_eta(const SpectralMeasure& e, double tau, const quad::QuadratureSpec& spec)
{
    check_tau(tau);
    spec.validate();
    if (e.atom_at_origin() != 0.0) throw DomainError("log eta: point mass at v = 0 makes log eta infinite");
    if (e.small_v().constant == 0.0 && e.large_v().decay == 0.0) return 0.0;

    // y = tau v; on (0, 1) substitute y = w^3 to absorb the logarithm.
    auto near = [&](double w) {
        const double y = w * w * w;
        return 3.0 * w * w * log_one_minus_exp(y) * e.eval(y / tau);
    };
    std::vector<double> near_splits;
    for (double y : feature_splits(e, tau, 0.0, 1.0)) near_splits.push_back(std::cbrt(y));
    const double a = checked(quad::integrate_finite(quad::Integrand(near), 0.0, 1.0, with_splits(spec, near_splits)),
                             "log eta on (0, 1)");

    auto far = [&](double y) { return log_one_minus_exp(y) * e.eval(y / tau); };
    auto far_splits = feature_splits(e, tau, 1.0, exp_cutoff);
    far_splits.push_back(40.0);
    const double b = checked(quad::integrate_finite(quad::Integrand(far), 1.0, exp_cutoff, with_splits(spec, far_splits)),
                             "log eta on (1, inf)");
    return (a + b) / tau;
}

double one_point_log_eta_closed(const models::OnePointModel& m, double tau)
{
    m.validate();
    check_tau(tau);
    if (m.alpha == 0.0) throw DomainError("log eta: alpha = 0 makes log eta infinite");
    return -specfun::binet_remainder(2.0 * m.alpha * tau);
}

double eta_series_partial(const SpectralMeasure& e, double tau, int n_max, const quad::QuadratureSpec& spec)
{
    check_tau(tau);
    if (n_max < 1) throw DomainError("eta series: n_max must be at least 1");
    if (e.atom_at_origin() != 0.0) throw DomainError("eta series: point mass at v = 0 makes log eta infinite");
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) sum -= laplace(e, n * tau, spec) / n;
    return sum;
}

double eta_series_check(const SpectralMeasure& e, double tau, int n_max, const quad::QuadratureSpec& spec)
{
    check_tau(tau);
    if (n_max < 1) throw DomainError("eta series: n_max must be at least 1");
    if (e.atom_at_origin() != 0.0) throw DomainError("eta series: point mass at v = 0 makes log eta infinite");
    std::vector<double> partial(std::size_t(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) partial[n] = partial[n - 1] - laplace(e, n * tau, spec) / n;

    std::vector<int> nodes;
    for (int j = 0; j < 7; ++j) {
        const int n = int(std::lround(n_max / (1.0 + 0.5 * j)));
        if (n >= 1 && (nodes.empty() || n < nodes.back())) nodes.push_back(n);
    }
    std::vector<double> h;
    std::vector<double> y;
    for (int n : nodes) {
        h.push_back(1.0 / n);
        y.push_back(partial[n]);
    }
    return neville_at_zero(h, y);
}

double vacuum_energy(const LaurentData& laurent, double ell)
{
    if (!(std::isfinite(ell) && ell > 0.0)) throw DomainError("vacuum energy: ell must be positive");
    return -(std::log(2.0 * ell) - 1.0) * laurent.residue + 0.5 * laurent.finite_part;
}

PartitionReport relative_partition(const SpectralMeasure& e, const LaurentData& laurent, const ThermalState& th,
                                   const quad::QuadratureSpec& spec)
{
    th.validate();
    PartitionReport rep;
    rep.laurent = laurent;
    rep.tag = e.tag();
    rep.eta_log = log_eta(e, th.beta, spec);
    rep.terms = {
        {"residue", th.beta * (std::log(2.0 * th.ell) - 1.0) * laurent.residue},
        {"finite_part", -0.5 * th.beta * laurent.finite_part},
        {"eta", -rep.eta_log},
    };
    for (const auto& [name, value] : rep.terms) rep.log_z += value;
    rep.vacuum_energy = vacuum_energy(laurent, th.ell);
    return rep;
}

double low_temperature_slope(const SpectralMeasure& e, const LaurentData& laurent, const ThermalState& th,
                             double dbeta, const quad::QuadratureSpec& spec)
{
    th.validate();
    if (!(std::isfinite(dbeta) && dbeta > 0.0 && dbeta < th.beta))
        throw DomainError("slope: dbeta must lie in (0, beta)");
    const auto up = relative_partition(e, laurent, {th.beta + dbeta, th.ell}, spec);
    const auto down = relative_partition(e, laurent, {th.beta - dbeta, th.ell}, spec);
    return -(up.log_z - down.log_z) / (2.0 * dbeta);
}

double one_point_log_z_explicit(const models::OnePointModel& m, const ThermalState& th)
{
    m.validate();
    th.validate();
    if (m.alpha == 0.0) throw DomainError("log Z: alpha = 0 makes log Z infinite");
    const double alpha = m.alpha;
    const double z = 2.0 * alpha * th.beta;
    return z * (std::log(8.0 * pi * th.ell * alpha) - 1.0) + specfun::log_gamma(z) + 0.5 * std::log(z) -
           z * (std::log(z) - 1.0) - 0.5 * std::log(2.0 * pi);
}

PartitionReport two_point_partition(const models::TwoPointModel& m, const ThermalState& th,
                                    const quad::QuadratureSpec& spec)
{
    th.validate();
    const auto parts = zetareg::two_point_laurent_parts(m, spec);
    const auto e = models::two_point_spectral_measure(m);
    PartitionReport rep;
    rep.laurent = {parts.z_b_residue, parts.zeta0 + parts.z_a + parts.z_b_finite, ""};
    rep.tag = e.tag();
    rep.eta_log = log_eta(e, th.beta, spec);
    const double beta = th.beta;
    rep.terms = {
        {"z_a", -0.5 * beta * parts.z_a},
        {"residue", beta * (std::log(2.0 * th.ell) - 1.0) * 2.0 * (m.alpha0 + m.alpha1)},
        {"cosine_integral", -beta * specfun::cosine_integral(2.0 * m.a) / (pi * m.a)},
        {"zeta0", -0.5 * beta * parts.zeta0},
        {"eta", -rep.eta_log},
    };
    for (const auto& [name, value] : rep.terms) rep.log_z += value;
    rep.vacuum_energy = vacuum_energy(rep.laurent, th.ell);
    return rep;
}

ForceEstimate casimir_force(const models::TwoPointModel& m, const ThermalState& th, double h, ForceRoute route,
                            const quad::QuadratureSpec& spec)
{
    m.validate();
    th.validate();
    if (!(std::isfinite(h) && h > 0.0 && h < 1.0)) throw DomainError("casimir force: h must lie in (0, 1)");
    for (double f : {1.0 - h, 1.0 - 0.5 * h, 1.0 + 0.5 * h, 1.0 + h}) {
        models::TwoPointModel shifted = m;
        shifted.a = m.a * f;
        try {
            shifted.validate();
        } catch (const BoundStateError&) {
            throw StepTooLargeError("casimir force: stencil point a = " + std::to_string(shifted.a) +
                                    " violates the no-bound-state constraint; use a smaller h");
        }
    }

    // a-dependent part of E_vacuum only.
    auto energy = [&](double a) {
        models::TwoPointModel shifted = m;
        shifted.a = a;
        if (route == ForceRoute::imaginary_axis) return 0.5 * zetareg::two_point_interaction_finite_part(shifted, spec);
        return vacuum_energy(zetareg::two_point_laurent(shifted, spec), th.ell);
    };
    auto central = [&](double step) {
        const double da = m.a * step;
        return (energy(m.a + da) - energy(m.a - da)) / (2.0 * da);
    };
    const double coarse = central(h);
    const double fine = central(0.5 * h);
    return {-(4.0 * fine - coarse) / 3.0, std::abs(fine - coarse)};
}

}  // namespace deltazeta::thermo
