// oracles.hpp: reference computations built along different routes from the
// library code they check. Slow and simple on purpose; used by the tests and
// by `clausius verify`.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/hilbert.hpp"
#include "clausius/interferometer.hpp"

#include <vector>

namespace clausius::oracles {

/// Eigenvalues (ascending) of a Hermitian matrix by cyclic Jacobi rotations on
/// its real 2n x 2n embedding.
std::vector<double> jacobi_eigenvalues(const CMatrix& a);

/// -sum p ln p over jacobi_eigenvalues, zero below 1e-12.
double jacobi_entropy(const CMatrix& rho);

/// Ergotropy as the largest energy drop over every pairing of eigenvalues with
/// the diagonal energies of `hamiltonian` (all n! permutations).
double brute_force_ergotropy(const CMatrix& rho, const CMatrix& hamiltonian);

/// Two-level truncation of the Markovian equation, solved exactly.
struct TwoLevelSolution {
    double p_excited = 0.0;
    complex coherence{0.0, 0.0}; // rho_01
};
TwoLevelSolution two_level_markov(double p_excited0, complex coherence0, double Gamma, double nbar, double t);
double two_level_steady_population(double nbar);

/// Delta(t) with the tau integral done first in closed form:
/// gamma0 int_0^w_max J coth [sin((w-W)t)/(2(w-W)) + sin((w+W)t)/(2(w+W))] dw.
double delta_swapped_order(const bath::BathSpec& spec, double t);

/// Delta(t) in time order: gamma0 int_0^t kappa(tau) cos(Omega tau) dtau,
/// with kappa from half-period segments. Slow beyond a few cutoff times.
double delta_time_order(const bath::BathSpec& spec, double t);

/// gamma(t) = gamma0 int_0^t gamma0 Lambda^2 e^{-Lambda tau} sin(Omega tau) dtau, in closed form.
double gamma_closed_form(const bath::BathSpec& spec, double t);

/// rho_s(infinity) written out entry by entry.
CMatrix explicit_asymptotic_state(double c1_sq, double c2_sq, double nbar);

/// V |psi><psi| V^dagger with V built element-wise.
CMatrix bs3_conjugated_pure_state(const interferometer::InterferometerConfig& cfg);

/// int Pr(P) dP by adaptive quadrature over +-12 sqrt(Omega), and the value
/// expected from integrating each fringe term against the Gaussian envelope.
double pattern_norm_numeric(const interferometer::InterferometerConfig& cfg, const bath::BathSpec& spec, double t);
double pattern_norm_analytic(const interferometer::InterferometerConfig& cfg, double nbar, double eta);

} // namespace clausius::oracles
