#include "clausius/thermo.hpp"

#include "clausius/errors.hpp"
#include "clausius/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace clausius::thermo {

using interferometer::DecoherenceFactor;

double internal_energy(const DensityMatrix& rho, const OperatorMatrix& hamiltonian) {
    if (rho.dim() != hamiltonian.rows() || hamiltonian.rows() != hamiltonian.cols()) {
        throw error(errc::dimension_mismatch, "state and Hamiltonian dimensions differ");
    }
    return (rho.matrix() * hamiltonian).trace().real();
}

namespace {

QuadratureMoments quadratures_at_eta(const InterferometerConfig& cfg, double omega, double eta) {
    const double z = cfg.z();
    const double th = cfg.theta();
    const double phi = cfg.phi();
    const double diag = 1.0 + cfg.c2_sq() / 2.0 * (3.0 - eta * std::cos(phi));
    const double coh = std::numbers::sqrt2 * z * std::sqrt(eta) * (std::sin(th) - std::sin(phi - th));
    return {(diag + coh) / (2.0 * omega), omega / 2.0 * (diag - coh)};
}

double decay_rate(const bath::BathSpec& spec) {
    const bath::RateSet r = bath::asymptotic_rates(spec);
    return r.Gamma * (2.0 * r.nbar + 1.0);
}

// d<X^2>/dt and d<P^2>/dt of the closed-form quadratures, differentiated
// through eta with d(eta)/dt = -rate eta.
QuadratureMoments quadrature_rates(const InterferometerConfig& cfg, double omega, double rate, double t) {
    const double eta = std::exp(-rate * t);
    const double z = cfg.z();
    const double th = cfg.theta();
    const double phi = cfg.phi();
    const double d_diag = rate * eta * cfg.c2_sq() / 2.0 * std::cos(phi);
    const double d_coh = -rate * std::sqrt(eta) / 2.0 * std::numbers::sqrt2 * z * (std::sin(th) - std::sin(phi - th));
    return {(d_diag + d_coh) / (2.0 * omega), omega / 2.0 * (d_diag - d_coh)};
}

} // namespace

QuadratureMoments quadratures_closed_form(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    return quadratures_at_eta(cfg, spec.omega(), DecoherenceFactor::at(spec, t).eta);
}

QuadratureMoments quadratures_from_state(const DensityMatrix& rho, double omega) {
    if (rho.dim() != 3) {
        throw error(errc::dimension_mismatch, "quadratures_from_state expects the 3-level relabeled state");
    }
    const hilbert::QuadratureOperators q = hilbert::quadrature_operators(3, omega);
    return {(rho.matrix() * q.x2).trace().real(), (rho.matrix() * q.p2).trace().real()};
}

double heat_closed_form(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    const double eta = DecoherenceFactor::at(spec, t).eta;
    return spec.omega() * std::cos(cfg.phi()) / 4.0 * cfg.c2_sq() * (1.0 - eta);
}

std::vector<double> heat_from_quadratures(const InterferometerConfig& cfg, const bath::BathSpec& spec,
                                          std::span<const double> t_grid) {
    const double omega = spec.omega();
    const double rate = decay_rate(spec);
    auto du = [&](double s) {
        const QuadratureMoments d = quadrature_rates(cfg, omega, rate, s);
        return 0.5 * omega * omega * d.x2 + 0.5 * d.p2;
    };
    std::vector<double> q;
    q.reserve(t_grid.size());
    double acc = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        if (!(t >= prev) || !std::isfinite(t)) {
            throw error(errc::invalid_parameter, "heat grid must be finite, non-negative and increasing");
        }
        if (t > prev) {
            // Breakpoints every two decay times keep each adaptive piece smooth.
            std::vector<double> pts{prev};
            if (rate > 0.0) {
                for (double s = prev + 2.0 / rate; s < t && pts.size() < 64; s += 2.0 / rate) {
                    pts.push_back(s);
                }
            }
            pts.push_back(t);
            acc += quadrature::piecewise(du, pts, 1e-11).value;
        }
        q.push_back(acc);
        prev = t;
    }
    return q;
}

double entropy_infinity(double c2_sq, double nbar) {
    if (!(c2_sq > 0.0 && c2_sq < 1.0)) {
        throw error(errc::invalid_parameter, "entropy_infinity needs 0 < |C2|^2 < 1");
    }
    auto plogp = [](double p) { return p > 0.0 ? p * std::log(p) : 0.0; };
    const double m = 2.0 * nbar + 1.0;
    const double c1_sq = 1.0 - c2_sq;
    return -c2_sq * (plogp(nbar / m) + plogp((nbar + 1.0) / m)) - plogp(c1_sq) - plogp(c2_sq);
}

double entropy_infinity(const InterferometerConfig& cfg, const bath::BathSpec& spec) {
    return entropy_infinity(cfg.c2_sq(), bath::mean_occupation(spec.omega(), spec.temperature()));
}

ThermoRecord clausius_function(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    if (!(spec.temperature() > 0.0)) {
        throw error(errc::invalid_parameter, "Clausius functional needs T > 0");
    }
    const interferometer::AuditedState st = interferometer::closed_form_audit_state(cfg, spec, t);
    ThermoRecord rec;
    rec.t = t;
    rec.U = quadratures_closed_form(cfg, spec, t).energy(spec.omega());
    rec.Q = heat_closed_form(cfg, spec, t);
    rec.S = hilbert::von_neumann_entropy(st.state);
    rec.F = rec.S - rec.Q / spec.thermal_frequency();
    rec.violation = rec.F < 0.0;
    rec.projected = st.projected;
    rec.min_eigenvalue = st.min_eigenvalue;
    return rec;
}

double clausius_infinity(const InterferometerConfig& cfg, double x) {
    const double nbar = std::isinf(x) ? 0.0 : 1.0 / std::expm1(x);
    return entropy_infinity(cfg.c2_sq(), nbar) - x * cfg.c2_sq() * std::cos(cfg.phi()) / 4.0;
}

double violation_crossover(const InterferometerConfig& cfg) {
    if (!(cfg.c2_sq() > 0.0 && cfg.c2_sq() < 1.0)) {
        throw error(errc::invalid_parameter, "crossover needs 0 < |C2|^2 < 1");
    }
    double lo = 1e-6;
    double hi = 1e6;
    const double f_lo = clausius_infinity(cfg, lo);
    const double f_hi = clausius_infinity(cfg, hi);
    if (!(f_lo > 0.0 && f_hi < 0.0)) {
        std::ostringstream msg;
        msg << "F(inf) does not change sign on [" << lo << ", " << hi << "]: " << f_lo << ", " << f_hi;
        throw error(errc::no_crossover, msg.str());
    }
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (clausius_infinity(cfg, mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ConsistencyReport consistency_report(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    ConsistencyReport r;
    r.closed = quadratures_closed_form(cfg, spec, t);
    const interferometer::AuditedState st = interferometer::closed_form_audit_state(cfg, spec, t);
    r.traced = quadratures_from_state(st.state, spec.omega());
    r.x2_gap = r.closed.x2 - r.traced.x2;
    r.p2_gap = r.closed.p2 - r.traced.p2;
    r.heat_closed = heat_closed_form(cfg, spec, t);
    if (std::isfinite(t)) {
        const double grid[] = {t};
        r.heat_integrated = heat_from_quadratures(cfg, spec, grid).front();
    } else {
        r.heat_integrated =
            quadratures_closed_form(cfg, spec, t).energy(spec.omega()) - quadratures_closed_form(cfg, spec, 0.0).energy(spec.omega());
    }
    r.heat_gap = r.heat_closed - r.heat_integrated;
    return r;
}

} // namespace clausius::thermo
