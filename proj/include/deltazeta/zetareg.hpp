#pragma once

#include <complex>
#include <string>

#include "deltazeta/models.hpp"
#include "deltazeta/quad.hpp"

namespace deltazeta::zetareg {

using models::SpectralMeasure;

/// Residue and constant term of the relative zeta function at s = -1/2.
struct LaurentData {
    double residue = 0.0;
    double finite_part = 0.0;
    std::string note;
};

/// Open strip lo < Re s < hi where the defining integral over e(v) converges.
struct ZetaStrip {
    double lo = -0.5;
    double hi = 0.5;
    bool contains(double re_s) const { return lo < re_s && re_s < hi; }
};

/// Tighter tolerances used by default throughout this module.
quad::QuadratureSpec precise_spec();

ZetaStrip zeta_strip(const SpectralMeasure& e);

/// Tr(exp(-tL) - exp(-tL0)) = int_0^inf exp(-v^2 t) e(v) dv.
/// Throws NonConvergenceError when the quadrature fails.
double relative_heat_trace(const SpectralMeasure& e, double t, const quad::QuadratureSpec& spec = precise_spec());

/// (1/2) exp(c^2 t) erfc(c sqrt t), c = 4 pi alpha.
double one_point_heat_trace_closed(const models::OnePointModel& m, double t);

/// zeta(s) = int_0^inf v^{-2s} e(v) dv for s inside zeta_strip(e).
/// Throws ContinuationRequiredError outside the strip. For real s the
/// imaginary part is verified to vanish and dropped.
std::complex<double> relative_zeta_in_strip(const SpectralMeasure& e, std::complex<double> s,
                                            const quad::QuadratureSpec& spec = precise_spec());

/// zeta(s) = (1/Gamma(s)) int_0^inf t^{s-1} Tr(exp(-tL) - exp(-tL0)) dt, 0 < s < 1/2.
double relative_zeta_mellin(const SpectralMeasure& e, double s,
                            const quad::QuadratureSpec& spec = precise_spec());

/// (1/2) (4 pi alpha)^{-2s} / cos(pi s); PoleError at half-integers.
std::complex<double> one_point_zeta_closed(const models::OnePointModel& m, std::complex<double> s);

/// residue 2 alpha, finite part -4 alpha log(4 pi alpha).
LaurentData one_point_laurent(const models::OnePointModel& m);

/// Pieces of the two-point continuation with the integral split at v = 1:
/// zeta0 = int_0^1 v e(v) dv, z_a = int_1^inf v (e(v) - profile(v)) dv and
/// the exact contribution of the profile, residue 2(alpha0 + alpha1) and
/// finite part 2 Ci(2a) / (pi a).
struct TwoPointLaurentParts {
    double zeta0 = 0.0;
    double z_a = 0.0;
    double z_b_residue = 0.0;
    double z_b_finite = 0.0;
};

TwoPointLaurentParts two_point_laurent_parts(const models::TwoPointModel& m,
                                             const quad::QuadratureSpec& spec = precise_spec());
LaurentData two_point_laurent(const models::TwoPointModel& m, const quad::QuadratureSpec& spec = precise_spec());

/// a-dependent part of the two-point finite part, from the trace on the
/// imaginary axis k = i y:
///   (1 / (pi a)) int_0^inf log(1 - e^{-2y} / ((b0 + y)(b1 + y))) dy.
double two_point_interaction_finite_part(const models::TwoPointModel& m,
                                         const quad::QuadratureSpec& spec = precise_spec());

/// Laurent data assembled as -4 alpha0 log(4 pi alpha0) - 4 alpha1 log(4 pi alpha1)
/// plus the interaction part above.
LaurentData two_point_laurent_imaginary_axis(const models::TwoPointModel& m,
                                             const quad::QuadratureSpec& spec = precise_spec());

/// Continued zeta at s = -1/2 +- delta (delta = 0.04, 0.02, 0.01) by subtracting
/// the large-v profile, followed by Richardson extrapolation in delta^2.
/// Throws ExtrapolationError when consecutive orders disagree by more than tol.
LaurentData numeric_laurent_probe(const SpectralMeasure& e, double tol = 1e-4,
                                  const quad::QuadratureSpec& spec = precise_spec());

/// Zeta continued past the lower strip edge by subtracting the large-v
/// profile; valid for -1 < s < 1/2, s != -1/2.
double continued_zeta(const SpectralMeasure& e, double s, const quad::QuadratureSpec& spec = precise_spec());

}  // namespace deltazeta::zetareg
