// dynamics.hpp: Lindblad generators of the damped oscillator on a truncated
// Fock space and a fixed-step RK4 integrator for density matrices.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/hilbert.hpp"

#include <functional>
#include <span>
#include <vector>

namespace clausius::dynamics {

enum class GeneratorMode { markovian, secular };

using CoefficientSource = std::function<bath::Coefficients(double)>;

class LindbladGenerator {
public:
    /// drho/dt = -Gamma (nbar+1) D[a] - Gamma nbar D[a^dagger], with
    /// D[L] = L^dagger L rho - 2 L rho L^dagger + rho L^dagger L.
    static LindbladGenerator markovian(int dim, double Gamma, double nbar);
    static LindbladGenerator markovian(int dim, const bath::RateSet& rates) {
        return markovian(dim, rates.Gamma, rates.nbar);
    }

    /// Same structure with prefactors (Delta(t) + gamma(t))/2 and (Delta(t) - gamma(t))/2.
    /// rate_bound is an upper bound on |Delta| + |gamma| over the integration window.
    static LindbladGenerator secular(int dim, CoefficientSource coefficients, double rate_bound);

    int dim() const noexcept { return dim_; }
    GeneratorMode mode() const noexcept { return mode_; }
    double Gamma() const noexcept { return Gamma_; }
    double nbar() const noexcept { return nbar_; }

    /// Characteristic relaxation rate: Gamma (2 nbar + 1) in Markovian mode.
    double rate_scale() const noexcept { return rate_scale_; }

    /// Prefactors (c_down, c_up) of D[a] and D[a^dagger] at time t.
    std::pair<double, double> prefactors(double t) const;

    const CMatrix& a() const noexcept { return a_; }
    const CMatrix& adag() const noexcept { return adag_; }
    const CMatrix& number() const noexcept { return n_; }
    const CMatrix& anti_number() const noexcept { return anti_n_; }

private:
    LindbladGenerator() = default;

    int dim_ = 0;
    GeneratorMode mode_ = GeneratorMode::markovian;
    double Gamma_ = 0.0;
    double nbar_ = 0.0;
    double rate_scale_ = 0.0;
    CoefficientSource coefficients_;
    CMatrix a_, adag_, n_, anti_n_; // a, a^dagger, a^dagger a, a a^dagger
};

CMatrix markovian_rhs(const LindbladGenerator& gen, const CMatrix& rho);
CMatrix secular_rhs(const LindbladGenerator& gen, const CMatrix& rho, double t);
/// Dispatches on the generator mode.
CMatrix rhs(const LindbladGenerator& gen, const CMatrix& rho, double t);

struct TrajectoryPoint {
    double t = 0.0;
    DensityMatrix rho;
    double trace_drift = 0.0;    // |tr - 1| before renormalization in the last step
    double min_eigenvalue = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    std::size_t steps = 0;
    double step = 0.0;             // largest substep used
    double max_trace_drift = 0.0;
    double min_eigenvalue = 1.0;
};

struct EvolveOptions {
    /// Substep is at most step_fraction / (rate_scale (dim - 1)) and never above
    /// the grid spacing.
    double step_fraction = 0.01;
    double trace_drift_budget = 1e-8;
    double positivity_floor = -1e-6;
};

/// Integrates from t = 0 through every grid point (strictly increasing,
/// t_grid[0] >= 0). Each substep is re-Hermitized; trace drift below the budget
/// is renormalized away, anything larger throws integration-failure, as does
/// a minimum eigenvalue below the positivity floor at an output point.
Trajectory evolve(const DensityMatrix& rho0, const LindbladGenerator& gen, std::span<const double> t_grid,
                  const EvolveOptions& opts = {});

/// Embeds a state vector into the first levels of a dim-dimensional Fock space.
DensityMatrix embed(const DensityMatrix& rho, int dim);

} // namespace clausius::dynamics
