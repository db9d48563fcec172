#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltazeta/models.hpp"
#include "deltazeta/zetareg.hpp"

namespace deltazeta::thermo {

using models::SpectralMeasure;
using zetareg::LaurentData;

struct ThermalState {
    double beta = 1.0;
    double ell = 1.0;

    /// Radius of the thermal circle, beta / (2 pi).
    double r() const;
    /// Throws DomainError unless beta > 0 and ell > 0 (both finite).
    void validate() const;
};

struct PartitionReport {
    double log_z = 0.0;
    double vacuum_energy = 0.0;
    double eta_log = 0.0;
    LaurentData laurent;
    std::string tag;
    /// Named contributions summing to log_z.
    std::vector<std::pair<std::string, double>> terms;
};

/// log eta(tau) = int_0^inf log(1 - e^{-tau v}) e(v) dv.
double log_eta(const SpectralMeasure& e, double tau, const quad::QuadratureSpec& spec = zetareg::precise_spec());

/// Closed form for the one-point model: minus the Binet remainder of Gamma at 2 alpha tau,
///   -(log Gamma(z) - (z - 1/2) log z + z - log(2 pi)/2), z = 2 alpha tau.
double one_point_log_eta_closed(const models::OnePointModel& m, double tau);

/// -sum_{n=1}^{n_max} (1/n) int_0^inf e^{-n tau v} e(v) dv.
double eta_series_partial(const SpectralMeasure& e, double tau, int n_max,
                          const quad::QuadratureSpec& spec = zetareg::precise_spec());

/// Partial sums of the series above at n = n_max / (1 + j/2), j = 0..6,
/// extrapolated polynomially in 1/n to n = infinity.
double eta_series_check(const SpectralMeasure& e, double tau, int n_max,
                        const quad::QuadratureSpec& spec = zetareg::precise_spec());

/// -(log 2 ell - 1) Res_1 + Res_0 / 2.
double vacuum_energy(const LaurentData& laurent, double ell);

/// log Z = beta (log 2 ell - 1) Res_1 - (beta/2) Res_0 - log eta(beta).
PartitionReport relative_partition(const SpectralMeasure& e, const LaurentData& laurent, const ThermalState& th,
                                   const quad::QuadratureSpec& spec = zetareg::precise_spec());

/// -d(log Z)/d(beta) at th.beta by a central difference of width 2 dbeta;
/// tends to E_vacuum as beta grows.
double low_temperature_slope(const SpectralMeasure& e, const LaurentData& laurent, const ThermalState& th,
                             double dbeta = 0.5, const quad::QuadratureSpec& spec = zetareg::precise_spec());

/// Fully explicit one-point log Z:
///   2 alpha beta (log(8 pi ell alpha) - 1) + log Gamma(2 alpha beta) + (1/2) log(2 alpha beta)
///   - 2 alpha beta (log(2 alpha beta) - 1) - (1/2) log 2 pi.
double one_point_log_z_explicit(const models::OnePointModel& m, const ThermalState& th);

/// Two-point log Z with terms zeta0, z_a, residue, cosine-integral and eta listed separately.
PartitionReport two_point_partition(const models::TwoPointModel& m, const ThermalState& th,
                                    const quad::QuadratureSpec& spec = zetareg::precise_spec());

enum class ForceRoute {
    /// Finite part from the trace on the imaginary axis.
    imaginary_axis,
    /// Finite part from the split zeta0 + z_a + Ci term.
    split,
};

struct ForceEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// force = -dE_vacuum/da from central differences at a(1 +- h) and a(1 +- h/2)
/// combined by one Richardson step. Throws StepTooLargeError when a stencil
/// point leaves the admitted region.
ForceEstimate casimir_force(const models::TwoPointModel& m, const ThermalState& th, double h = 1e-4,
                            ForceRoute route = ForceRoute::imaginary_axis,
                            const quad::QuadratureSpec& spec = zetareg::precise_spec());

}  // namespace deltazeta::thermo
