#pragma once

// Real special functions used by the spectral code. All functions are pure
// and throw deltazeta::DomainError outside their stated domain.

namespace deltazeta::specfun {

struct Accuracy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;

    /// Throws DomainError unless both tolerances are finite and strictly positive.
    void validate() const;
};

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Binet remainder log Gamma(x) - (x - 1/2) log x + x - log(2 pi)/2, for x > 0.
/// Uses the Stirling series for large x where the direct difference cancels.
double binet_remainder(double x);

/// exp(x^2) erfc(x) for x >= 0; finite for all x (~ 1/(x sqrt(pi)) at large x).
double erfc_scaled(double x);

/// Ci(x) = -int_x^inf cos(t)/t dt, x > 0.
double cosine_integral(double x);

/// Si(x) = int_0^x sin(t)/t dt, x > 0.
double sine_integral(double x);

/// K_{-1/2}(z) = sqrt(pi / (2z)) e^{-z}, z > 0.
double bessel_k_half(double z);

/// theta(t) = sum over n in Z of exp(-n^2 t), summed directly until a term
/// falls below acc.abs_tol.
double jacobi_theta_sum(double t, const Accuracy& acc = {});

}  // namespace deltazeta::specfun
