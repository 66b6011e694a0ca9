// thermo.hpp: internal energy, quadratures, exchanged heat, entropy and the
// Clausius functional F(t) = S_t - Q(t) / (k_B T) for the interferometer state.
//
// Energies are in hbar = 1 units (s^-1); multiply by PhysicalConstants::hbar
// for joules or divide by Omega for units of hbar*Omega.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/hilbert.hpp"
#include "clausius/interferometer.hpp"
#include "clausius/sweep.hpp"

#include <span>
#include <vector>

namespace clausius::thermo {

using interferometer::InterferometerConfig;

struct ThermoRecord {
    double t = 0.0;
    double U = 0.0; // hbar = 1 units
    double Q = 0.0;
    double S = 0.0; // nats
    double F = 0.0; // nats
    bool violation = false;
    /// True when the closed form had to be clipped to a valid state before
    /// taking its entropy (nbar < 1/2 regime).
    bool projected = false;
    double min_eigenvalue = 0.0;

    double U_joule() const noexcept { return U * bath::PhysicalConstants::hbar; }
    double Q_joule() const noexcept { return Q * bath::PhysicalConstants::hbar; }
};

/// Re tr[rho H].
double internal_energy(const DensityMatrix& rho, const OperatorMatrix& hamiltonian);

struct QuadratureMoments {
    double x2 = 0.0;
    double p2 = 0.0;

    double energy(double omega) const noexcept { return 0.5 * p2 + 0.5 * omega * omega * x2; }
};

/// The closed-form <X^2>, <P^2> of the interferometer state.
QuadratureMoments quadratures_closed_form(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

/// tr[rho X^2], tr[rho P^2] with the relabeled levels taken as Fock levels 0, 1, 2.
QuadratureMoments quadratures_from_state(const DensityMatrix& rho, double omega);

/// Q(t) = (Omega cos(phi) / 4) |C2|^2 (1 - eta).
double heat_closed_form(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

/// Q on an increasing grid by integrating dU = Omega^2/2 d<X^2> + 1/2 d<P^2> from
/// t = 0. The closed-form quadratures are differentiated analytically through
/// eta; each grid interval is integrated adaptively.
std::vector<double> heat_from_quadratures(const InterferometerConfig& cfg, const bath::BathSpec& spec,
                                          std::span<const double> t_grid);

/// S at t -> infinity from the closed expression. Needs 0 < |C2|^2 < 1.
double entropy_infinity(const InterferometerConfig& cfg, const bath::BathSpec& spec);
double entropy_infinity(double c2_sq, double nbar);

/// F(t) with S from the von Neumann entropy of the (audited) closed-form state
/// and Q from heat_closed_form. Needs T > 0.
ThermoRecord clausius_function(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

/// F(t -> infinity) as a function of x = hbar Omega / k_B T alone.
double clausius_infinity(const InterferometerConfig& cfg, double x);

/// x* with F(infinity)(x*) = 0, by bisection to 1e-6. Throws no-crossover when
/// F(infinity) does not change sign on [1e-6, 1e6].
double violation_crossover(const InterferometerConfig& cfg);

/// Closed-form vs operator-trace quadratures and closed-form vs integrated
/// heat, for the consistency report. Nothing here is asserted.
struct ConsistencyReport {
    QuadratureMoments closed;
    QuadratureMoments traced;
    double x2_gap = 0.0;
    double p2_gap = 0.0;
    double heat_closed = 0.0;
    double heat_integrated = 0.0;
    double heat_gap = 0.0;
};
ConsistencyReport consistency_report(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

} // namespace clausius::thermo
