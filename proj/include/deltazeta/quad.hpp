#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace deltazeta::quad {

using Integrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    /// Interior breakpoints; points outside the integration range are ignored.
    std::vector<double> split_points;
    /// Full period of the oscillating factor of the integrand. When set,
    /// integrate_to_infinity sums explicit panels instead of mapping the range.
    std::optional<double> oscillation_period;

    /// Throws DomainError on non-positive tolerances, unsorted split points,
    /// max_subdivisions < 1 or a non-positive period.
    void validate() const;
};

template <class T>
struct BasicQuadratureResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using QuadratureResult = BasicQuadratureResult<double>;
using ComplexQuadratureResult = BasicQuadratureResult<std::complex<double>>;

/// Globally adaptive 21-point Gauss-Kronrod integration over [lo, hi].
/// Throws IntegrandError on a non-finite sample; returns converged = false
/// when the subdivision budget runs out.
QuadratureResult integrate_finite(const Integrand& f, double lo, double hi,
                                  const QuadratureSpec& spec = {});
ComplexQuadratureResult integrate_finite(const ComplexIntegrand& f, double lo, double hi,
                                         const QuadratureSpec& spec = {});

/// Integral over [lo, inf).
///
/// Without an oscillation period the range is mapped onto [0, 1) through
/// v = lo + u / (1 - u) and handed to the adaptive rule.
///
/// With a period P, the integral is accumulated panel by panel (each period
/// split into its two half-periods). Partial integrals sampled at whole
/// periods are extrapolated to infinity with Sidi's W-algorithm; sampling at
/// whole periods keeps the remainder a smooth function of 1/x even when a
/// non-oscillating decaying part is present. max_subdivisions bounds the
/// number of periods summed explicitly.
QuadratureResult integrate_to_infinity(const Integrand& f, double lo,
                                       const QuadratureSpec& spec = {});
ComplexQuadratureResult integrate_to_infinity(const ComplexIntegrand& f, double lo,
                                              const QuadratureSpec& spec = {});

// Plain callables (lambdas) pick the real or complex overload from their return type.
template <class F>
concept PlainIntegrand = std::is_invocable_v<F&, double> && !std::is_same_v<std::decay_t<F>, Integrand> &&
                         !std::is_same_v<std::decay_t<F>, ComplexIntegrand>;

template <PlainIntegrand F>
auto integrate_finite(F&& f, double lo, double hi, const QuadratureSpec& spec = {})
{
    if constexpr (std::is_same_v<std::invoke_result_t<F&, double>, std::complex<double>>)
        return integrate_finite(ComplexIntegrand(std::forward<F>(f)), lo, hi, spec);
    else
        return integrate_finite(Integrand(std::forward<F>(f)), lo, hi, spec);
}

template <PlainIntegrand F>
auto integrate_to_infinity(F&& f, double lo, const QuadratureSpec& spec = {})
{
    if constexpr (std::is_same_v<std::invoke_result_t<F&, double>, std::complex<double>>)
        return integrate_to_infinity(ComplexIntegrand(std::forward<F>(f)), lo, spec);
    else
        return integrate_to_infinity(Integrand(std::forward<F>(f)), lo, spec);
}

}  // namespace deltazeta::quad
