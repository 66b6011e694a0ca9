#include "clausius/dynamics.hpp"

#include "clausius/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace clausius::dynamics {

namespace {

void init_operators(int dim, CMatrix& a, CMatrix& adag, CMatrix& n, CMatrix& anti_n) {
    auto [lower, raise] = hilbert::ladder_operators(dim);
    a = std::move(lower);
    adag = std::move(raise);
    n = adag * a;
    anti_n = a * adag;
}

// L^dagger L rho - 2 L rho L^dagger + rho L^dagger L
CMatrix dissipator(const CMatrix& l, const CMatrix& ldag, const CMatrix& ldag_l, const CMatrix& rho) {
    return ldag_l * rho - 2.0 * (l * rho * ldag) + rho * ldag_l;
}

CMatrix apply(const LindbladGenerator& gen, const CMatrix& rho, double c_down, double c_up) {
    if (rho.rows() != gen.dim() || rho.cols() != gen.dim()) {
        throw error(errc::dimension_mismatch, "state dimension does not match generator");
    }
    const CMatrix& a = gen.a();
    const CMatrix& adag = gen.adag();
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    if (c_down != 0.0) {
        out -= c_down * dissipator(a, adag, gen.number(), rho);
    }
    if (c_up != 0.0) {
        out -= c_up * dissipator(adag, a, gen.anti_number(), rho);
    }
    return out;
}

} // namespace

LindbladGenerator LindbladGenerator::markovian(int dim, double Gamma, double nbar) {
    if (!(Gamma >= 0.0) || !(nbar >= 0.0)) {
        throw error(errc::invalid_parameter, "Markovian generator needs Gamma >= 0 and nbar >= 0");
    }
    LindbladGenerator g;
    init_operators(dim, g.a_, g.adag_, g.n_, g.anti_n_);
    g.dim_ = dim;
    g.mode_ = GeneratorMode::markovian;
    g.Gamma_ = Gamma;
    g.nbar_ = nbar;
    g.rate_scale_ = Gamma * (2.0 * nbar + 1.0);
    return g;
}

LindbladGenerator LindbladGenerator::secular(int dim, CoefficientSource coefficients, double rate_bound) {
    if (!coefficients) {
        throw error(errc::invalid_parameter, "secular generator needs a coefficient source");
    }
    if (!(rate_bound >= 0.0)) {
        throw error(errc::invalid_parameter, "rate bound must be >= 0");
    }
    LindbladGenerator g;
    init_operators(dim, g.a_, g.adag_, g.n_, g.anti_n_);
    g.dim_ = dim;
    g.mode_ = GeneratorMode::secular;
    g.coefficients_ = std::move(coefficients);
    g.rate_scale_ = rate_bound;
    return g;
}

std::pair<double, double> LindbladGenerator::prefactors(double t) const {
    if (mode_ == GeneratorMode::markovian) {
        return {Gamma_ * (nbar_ + 1.0), Gamma_ * nbar_};
    }
    const bath::Coefficients c = coefficients_(t);
    return {0.5 * (c.Delta + c.gamma), 0.5 * (c.Delta - c.gamma)};
}

CMatrix markovian_rhs(const LindbladGenerator& gen, const CMatrix& rho) {
    if (gen.mode() != GeneratorMode::markovian) {
        throw error(errc::invalid_parameter, "markovian_rhs called with a secular generator");
    }
    const auto [down, up] = gen.prefactors(0.0);
    return apply(gen, rho, down, up);
}

CMatrix secular_rhs(const LindbladGenerator& gen, const CMatrix& rho, double t) {
    if (gen.mode() != GeneratorMode::secular) {
        throw error(errc::invalid_parameter, "secular_rhs called with a Markovian generator");
    }
    const auto [down, up] = gen.prefactors(t);
    return apply(gen, rho, down, up);
}

CMatrix rhs(const LindbladGenerator& gen, const CMatrix& rho, double t) {
    const auto [down, up] = gen.prefactors(t);
    return apply(gen, rho, down, up);
}

Trajectory evolve(const DensityMatrix& rho0, const LindbladGenerator& gen, std::span<const double> t_grid,
                  const EvolveOptions& opts) {
    if (rho0.dim() != gen.dim()) {
        throw error(errc::dimension_mismatch, "initial state dimension does not match generator");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw error(errc::invalid_parameter, "time grid must be strictly increasing from t >= 0");
        }
    }
    // Level n relaxes at roughly n times the base rate.
    const double fastest = gen.rate_scale() * std::max(1, gen.dim() - 1);
    const double h_max = fastest > 0.0 ? opts.step_fraction / fastest
                                                : std::numeric_limits<double>::infinity();

    Trajectory traj;
    CMatrix rho = rho0.matrix();
    double t = 0.0;
    double last_drift = 0.0;

    auto record = [&](double at) {
        const hilbert::Spectrum sp = hilbert::eig_hermitian(rho);
        const double lo = sp.values.minCoeff();
        if (lo < opts.positivity_floor) {
            std::ostringstream msg;
            msg << "min eigenvalue " << lo << " at t = " << at << " after " << traj.steps << " steps";
            throw error(errc::integration_failure, msg.str());
        }
        // Tiny negative eigenvalues inside the floor are tolerated in the record
        // but DensityMatrix only accepts -1e-10; clip those for storage.
        CMatrix stored = rho;
        if (lo < -hilbert::positivity_tolerance) {
            RVector vals = sp.values.cwiseMax(0.0);
            vals /= vals.sum();
            stored = sp.vectors * vals.asDiagonal() * sp.vectors.adjoint();
        }
        traj.points.push_back({at, DensityMatrix(stored), last_drift, lo});
        traj.min_eigenvalue = std::min(traj.min_eigenvalue, lo);
    };

    for (double target : t_grid) {
        const double span = target - t;
        if (span > 0.0) {
            const auto n_sub = static_cast<std::size_t>(std::max(1.0, std::ceil(span / h_max)));
            const double h = span / static_cast<double>(n_sub);
            traj.step = std::max(traj.step, h);
            for (std::size_t s = 0; s < n_sub; ++s) {
                const double t0 = t + static_cast<double>(s) * h;
                const CMatrix k1 = rhs(gen, rho, t0);
                const CMatrix k2 = rhs(gen, rho + 0.5 * h * k1, t0 + 0.5 * h);
                const CMatrix k3 = rhs(gen, rho + 0.5 * h * k2, t0 + 0.5 * h);
                const CMatrix k4 = rhs(gen, rho + h * k3, t0 + h);
                rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                rho = (rho + rho.adjoint()).eval() * 0.5;
                const double tr = rho.trace().real();
                last_drift = std::abs(tr - 1.0);
                traj.max_trace_drift = std::max(traj.max_trace_drift, last_drift);
                if (!(last_drift < opts.trace_drift_budget)) {
                    std::ostringstream msg;
                    msg << "trace drift " << last_drift << " at t = " << t0 + h << " (step " << traj.steps
                        << ", h = " << h << ")";
                    throw error(errc::integration_failure, msg.str());
                }
                rho /= tr;
                ++traj.steps;
            }
            t = target;
        }
        record(target);
    }
    return traj;
}

DensityMatrix embed(const DensityMatrix& rho, int dim) {
    if (dim < rho.dim()) {
        throw error(errc::invalid_dimension, "cannot embed into a smaller space");
    }
    CMatrix out = CMatrix::Zero(dim, dim);
    out.topLeftCorner(rho.dim(), rho.dim()) = rho.matrix();
    return DensityMatrix(out);
}

} // namespace clausius::dynamics
