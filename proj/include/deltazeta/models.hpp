#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace deltazeta::models {

using cplx = std::complex<double>;

/// Single delta interaction of strength alpha >= 0 at the origin, paired
/// with the free Laplacian.
struct OnePointModel {
    double alpha = 0.0;

    /// Throws DomainError unless alpha is finite and non-negative.
    void validate() const;
};

/// Two delta interactions at distance a with strengths alpha0, alpha1.
/// Admitted region: alpha0, alpha1 > 0 and 4 pi^2 alpha0 alpha1 a^2 >= 1.
struct TwoPointModel {
    double alpha0 = 1.0;
    double alpha1 = 1.0;
    double a = 1.0;

    /// Throws BoundStateError outside the admitted region, DomainError on
    /// non-finite or non-positive separation.
    void validate() const;
    /// 4 pi^2 alpha0 alpha1 a^2.
    double constraint_value() const;
    /// True when the constraint holds with equality (to 1e-12 relative).
    bool on_constraint_boundary() const;
};

struct ResolventPoint {
    cplx k;
    cplx value;
};

/// Leading small-v behaviour e(v) ~ constant * v^exponent.
struct SmallVProfile {
    double constant = 0.0;
    double exponent = 0.0;
};

/// Leading large-v behaviour
///   e(v) ~ (decay + oscillation * cos(frequency * v)) / v^2.
struct LargeVProfile {
    double decay = 0.0;
    double oscillation = 0.0;
    double frequency = 0.0;

    double operator()(double v) const;
    bool oscillatory() const { return oscillation != 0.0 && frequency > 0.0; }
    /// Period of the oscillating part; only meaningful when oscillatory().
    double period() const;
};

class SpectralMeasure {
public:
    using Density = std::function<double(double)>;

    SpectralMeasure(Density density, Density residual, SmallVProfile small, LargeVProfile large,
                    std::vector<double> scales, std::string tag, double atom_at_origin = 0.0);

    /// e(v) for v > 0; throws DomainError for v <= 0 or non-finite v.
    double eval(double v) const;
    double operator()(double v) const { return eval(v); }
    /// e(v) minus the large-v profile, computed without cancellation.
    double residual(double v) const;

    const SmallVProfile& small_v() const { return small_; }
    const LargeVProfile& large_v() const { return large_; }
    /// Weight of a point mass at v = 0 (non-zero only for the free coupling alpha = 0).
    double atom_at_origin() const { return atom_; }
    /// Characteristic scales of e(v), usable as quadrature breakpoints.
    const std::vector<double>& scales() const { return scales_; }
    const std::string& tag() const { return tag_; }

private:
    Density density_;
    Density residual_;
    SmallVProfile small_;
    LargeVProfile large_;
    std::vector<double> scales_;
    std::string tag_;
    double atom_;
};

/// Tr(R(k^2) - R0(k^2)) = 1 / (2ik (4 pi alpha - ik)); requires Im k > 0.
cplx one_point_resolvent_trace(const OnePointModel& m, cplx k);

/// Trace of the resolvent difference for the two-point interaction:
///   (a / (ik)) N / D,
///   N = 2 pi (alpha0 + alpha1) a - ika + e^{2ika},
///   D = (4 pi alpha0 a - ika)(4 pi alpha1 a - ika) - e^{2ika}.
cplx two_point_resolvent_trace(const TwoPointModel& m, cplx k);

ResolventPoint resolvent_point(const OnePointModel& m, cplx k);
ResolventPoint resolvent_point(const TwoPointModel& m, cplx k);

/// e(v) = (v / (pi i)) (r(-v + i0) - r(v + i0)) for a trace r given as a
/// function of k, evaluated at distance eps above the real axis.
double measure_from_trace(const std::function<cplx(cplx)>& trace, double v, double eps);

/// e(v) = 4 alpha / ((4 pi alpha)^2 + v^2).
SpectralMeasure one_point_spectral_measure(const OnePointModel& m);

/// Two-point measure, evaluated as the sum of the two one-point measures and
/// an interaction term (a/pi) Im[w_x / (1 - w)], w = e^{2ix} / ((b0 - ix)(b1 - ix)),
/// x = a v, b_j = 4 pi alpha_j a.
SpectralMeasure two_point_spectral_measure(const TwoPointModel& m);

/// K(v) with e(v) = e_1(alpha0) + e_1(alpha1) + Im K(v) on v > 0. K is analytic
/// in Im v >= 0 away from v = 0 and decays like e^{-2a Im v} there.
cplx two_point_interaction_kernel(const TwoPointModel& m, cplx v);

/// Same quantity computed directly as (2a/pi) Re(N/D) at k = v.
double two_point_measure_direct(const TwoPointModel& m, double v);

}  // namespace deltazeta::models
