#include "deltazeta/specfun.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "deltazeta/errors.hpp"

namespace deltazeta::specfun {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) throw DomainError(what);
}

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> stirling_coefficients = {
    1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

double stirling_tail(double x)
{
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double sum = 0.0;
    for (auto it = stirling_coefficients.rbegin(); it != stirling_coefficients.rend(); ++it)
        sum = sum * inv2 + *it;
    return sum * inv;
}

constexpr double half_log_two_pi = 0.91893853320467274178032973640562;

// Power series, accurate for 0 < x <= 4.
void cisi_series(double x, double& ci, double& si)
{
    const double x2 = x * x;
    double ci_sum = 0.0;
    double si_sum = x;
    double term = 1.0;  // (-1)^k x^{2k} / (2k)!
    for (int k = 1; k < 60; ++k) {
        term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double ci_term = term / (2.0 * k);
        const double si_term = term * x / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
        ci_sum += ci_term;
        si_sum += si_term;
        if (std::abs(ci_term) < 1e-18 && std::abs(si_term) < 1e-18) break;
    }
    ci = euler_gamma + std::log(x) + ci_sum;
    si = si_sum;
}

// Modified Lentz evaluation of the continued fraction for E1(ix); x > 2.
void cisi_continued_fraction(double x, double& ci, double& si)
{
    using cplx = std::complex<double>;
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    cplx b(1.0, x);
    cplx c(1.0 / tiny, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 2; i < 100000; ++i) {
        const double a = -double(i - 1) * double(i - 1);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) break;
    }
    h *= cplx(std::cos(x), -std::sin(x));
    ci = -h.real();
    si = std::numbers::pi / 2.0 + h.imag();
}

void cisi(double x, double& ci, double& si)
{
    if (x <= 4.0)
        cisi_series(x, ci, si);
    else
        cisi_continued_fraction(x, ci, si);
}

}  // namespace

void Accuracy::validate() const
{
    require(std::isfinite(abs_tol) && abs_tol > 0.0, "Accuracy: abs_tol must be positive");
    require(std::isfinite(rel_tol) && rel_tol > 0.0, "Accuracy: rel_tol must be positive");
}

double log_gamma(double x)
{
    require(std::isfinite(x) && x > 0.0, "log_gamma: argument must be positive and finite");
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

double binet_remainder(double x)
{
    require(std::isfinite(x) && x > 0.0, "binet_remainder: argument must be positive and finite");
    if (x >= 10.0) return stirling_tail(x);
    return log_gamma(x) - (x - 0.5) * std::log(x) + x - half_log_two_pi;
}

double erfc_scaled(double x)
{
    require(!std::isnan(x) && x >= 0.0, "erfc_scaled: argument must be non-negative");
    if (std::isinf(x)) return 0.0;
    if (x < 5.0) {
        // exp(x^2) with the rounding error of x*x folded back in.
        const double x2 = x * x;
        const double x2_err = std::fma(x, x, -x2);
        return std::exp(x2) * (1.0 + x2_err) * std::erfc(x);
    }
    // erfc(x) e^{x^2} sqrt(pi) = 1 / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 10000; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double del = c * d;
        f *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return 1.0 / (std::sqrt(std::numbers::pi) * f);
}

double cosine_integral(double x)
{
    require(std::isfinite(x) && x > 0.0, "cosine_integral: argument must be positive and finite");
    double ci = 0.0;
    double si = 0.0;
    cisi(x, ci, si);
    return ci;
}

double sine_integral(double x)
{
    require(std::isfinite(x) && x > 0.0, "sine_integral: argument must be positive and finite");
    double ci = 0.0;
    double si = 0.0;
    cisi(x, ci, si);
    return si;
}

double bessel_k_half(double z)
{
    require(!std::isnan(z) && z > 0.0, "bessel_k_half: argument must be positive");
    if (std::isinf(z)) return 0.0;
    return std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z);
}

double jacobi_theta_sum(double t, const Accuracy& acc)
{
    acc.validate();
    require(!std::isnan(t) && t > 0.0, "jacobi_theta_sum: t must be positive");
    if (std::isinf(t)) return 1.0;
    double tail = 0.0;
    for (long n = 1;; ++n) {
        const double term = std::exp(-double(n) * double(n) * t);
        tail += term;
        if (term < acc.abs_tol) break;
    }
    return 1.0 + 2.0 * tail;
}

}  // namespace deltazeta::specfun
