// bath.hpp: Ohmic bath with Lorentz-Drude cutoff. Spectral density, noise and
// dissipation kernels, the time-dependent master-equation coefficients and
// their long-time limits.
//
// All frequencies are angular (s^-1) and temperatures in kelvin. With hbar = 1
// internally, the only place the constants enter is the dimensionless group
// hbar*Omega/(k_B*T) and the thermal frequency k_B*T/hbar.

#pragma once

#include "clausius/sweep.hpp"

#include <span>
#include <vector>

namespace clausius::bath {

struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34;       // J s
    static constexpr double k_boltzmann = 1.380649e-23;   // J / K
};

/// Above this gamma0 the weak-coupling derivation is not trustworthy.
inline constexpr double weak_coupling_limit = 0.1;

class BathSpec {
public:
    /// cutoff is Lambda in s^-1; throws invalid-parameter on gamma0 <= 0,
    /// cutoff <= 0, omega <= 0 or temperature < 0.
    BathSpec(double gamma0, double cutoff, double omega, double temperature);

    static BathSpec from_ratio(double gamma0, double cutoff_ratio, double omega, double temperature) {
        return BathSpec(gamma0, cutoff_ratio * omega, omega, temperature);
    }

    double gamma0() const noexcept { return gamma0_; }
    double cutoff() const noexcept { return cutoff_; }
    double omega() const noexcept { return omega_; }
    double temperature() const noexcept { return temperature_; }
    double cutoff_ratio() const noexcept { return cutoff_ / omega_; }

    /// k_B T / hbar in s^-1 (0 at T = 0).
    double thermal_frequency() const noexcept;
    /// hbar Omega / (k_B T); +inf at T = 0.
    double hbar_omega_over_kt() const noexcept;
    bool weak_coupling() const noexcept { return gamma0_ <= weak_coupling_limit; }

    BathSpec with_temperature(double t) const { return BathSpec(gamma0_, cutoff_, omega_, t); }
    BathSpec with_gamma0(double g) const { return BathSpec(g, cutoff_, omega_, temperature_); }

private:
    double gamma0_;
    double cutoff_;
    double omega_;
    double temperature_;
};

struct RateSet {
    double Delta = 0.0; // diffusion, s^-1
    double gamma = 0.0; // damping, s^-1
    double Gamma = 0.0; // decay rate of the Markovian equation, s^-1
    double nbar = 0.0;  // thermal occupation at Omega
};

struct Coefficients {
    double Delta = 0.0;
    double gamma = 0.0;
};

double spectral_density(const BathSpec& spec, double w);

/// mu(tau) = int_0^inf J(w) sin(w tau) dw = gamma0 Lambda^2 exp(-Lambda tau), tau > 0.
double dissipation_kernel(const BathSpec& spec, double tau);

/// The same integral by half-period oscillatory quadrature with Wynn tail
/// acceleration. Verification path only.
double dissipation_kernel_quadrature(const BathSpec& spec, double tau);

/// kappa(tau) = int_0^w_max J(w) coth(hbar w / 2 k_B T) cos(w tau) dw with
/// w_max = noise_cutoff(spec). At T = 0 the coth factor is exactly 1.
double noise_kernel(const BathSpec& spec, double tau);
double noise_cutoff(const BathSpec& spec);

/// Delta(t) = gamma0 int_0^t kappa cos(Omega tau) dtau, with the tau integral
/// done in closed form and the remaining frequency integral by Fourier
/// quadrature, so the cost does not grow with t.
double diffusion_coefficient(const BathSpec& spec, double t);

/// Delta(t) as above, gamma(t) = gamma0 int_0^t mu sin(Omega tau).
/// The gamma0 prefactor is the second power of the system-bath coupling that
/// the second-order master equation carries; it makes the long-time limits
/// equal asymptotic_rates().
Coefficients time_dependent_coefficients(const BathSpec& spec, double t);

/// Coefficients on an increasing grid (t >= 0). Pieces between consecutive
/// breakpoints are integrated independently and prefix-summed in order, so
/// serial and parallel execution give identical results.
std::vector<Coefficients> time_dependent_coefficients(const BathSpec& spec, std::span<const double> t_grid,
                                                      Execution ex = Execution::serial);

RateSet asymptotic_rates(const BathSpec& spec);

/// Bose-Einstein occupation (exp(hbar Omega / k_B T) - 1)^-1; exactly 0 at T = 0.
double mean_occupation(double omega, double temperature);

/// coth(hbar Omega / 2 k_B T); exactly 1 at T = 0.
double coth_half(double omega, double temperature);

/// T such that log10(Omega / T) = log10_ratio.
double temperature_from_log_ratio(double omega, double log10_ratio);

/// Piecewise-linear table of time-dependent coefficients, used as the rate
/// source of the secular generator. Holds the last value beyond the grid.
class CoefficientTable {
public:
    CoefficientTable(std::vector<double> t_grid, std::vector<Coefficients> values);

    static CoefficientTable sample(const BathSpec& spec, double t_max, int n, Execution ex = Execution::serial);

    Coefficients operator()(double t) const;
    double max_rate() const noexcept { return max_rate_; }

private:
    std::vector<double> t_;
    std::vector<Coefficients> v_;
    double max_rate_ = 0.0;
};

} // namespace clausius::bath
