#include "clausius/figures.hpp"

#include "clausius/coherence.hpp"
#include "clausius/errors.hpp"
#include "clausius/interferometer.hpp"
#include "clausius/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace clausius::app {

namespace {

using interferometer::InterferometerConfig;

const std::vector<double> fig3a_sweep{9.52, 11.0, 12.0, 13.0, 23.0};
const std::vector<double> fig4_sweep{9.52, 10.0, 11.0, 12.0, 23.0};

void require_open_c2(const InterferometerConfig& ic, const std::string& id) {
    if (!(ic.c2_sq() > 0.0 && ic.c2_sq() < 1.0)) {
        throw error(errc::invalid_parameter, "c2_sq: " + id + " needs 0 < c2_sq < 1");
    }
}

void note_projection(FigureResult& r, bool projected, double min_eigenvalue) {
    if (projected) {
        ++r.projected_rows;
        r.worst_min_eigenvalue = std::min(r.worst_min_eigenvalue, min_eigenvalue);
    }
}

std::vector<double> momentum_grid(const RunConfig& cfg) {
    const double w = std::sqrt(cfg.omega);
    return make_grid(-6.0 * w, 6.0 * w, cfg.p_n.value_or(401), Spacing::linear);
}

FigureResult pattern_rows(const RunConfig& cfg, const bath::BathSpec& spec, std::span<const double> times,
                          Execution ex) {
    const InterferometerConfig ic = cfg.interferometer(0.5);
    const std::vector<double> ps = momentum_grid(cfg);
    const std::size_t np = ps.size();
    std::vector<double> pr(times.size() * np);
    for_each_index(
        pr.size(),
        [&](std::size_t k) { pr[k] = interferometer::interference_pattern(ic, spec, times[k / np], ps[k % np]); }, ex);
    FigureResult r;
    r.data.columns = {"t", "P", "Pr"};
    for (std::size_t k = 0; k < pr.size(); ++k) {
        r.data.rows.push_back({times[k / np], ps[k % np], pr[k]});
    }
    return r;
}

FigureResult fig2a(const RunConfig& cfg, Execution ex) {
    const std::vector<double> times = time_grid(cfg, 1e-9, 1e-7, 3, Spacing::log);
    return pattern_rows(cfg, cfg.bath(), times, ex);
}

FigureResult fig2b(const RunConfig& cfg, Execution ex) {
    RunConfig c = cfg;
    if (!c.temperature && !c.log10_omega_over_t) {
        c.log10_omega_over_t = 23.0;
    }
    const double times[] = {std::numeric_limits<double>::infinity()};
    return pattern_rows(c, c.bath(), times, ex);
}

FigureResult fig3a(const RunConfig& cfg, Execution ex) {
    const InterferometerConfig ic = cfg.interferometer(0.5);
    require_open_c2(ic, "fig3a");
    const std::vector<double> sweep = cfg.sweep_log10.value_or(fig3a_sweep);
    const std::vector<double> times = time_grid(cfg, 1e-10, 1e-5, 200, Spacing::log);
    const std::size_t nt = times.size();
    std::vector<thermo::ThermoRecord> recs(sweep.size() * nt);
    for_each_index(
        recs.size(),
        [&](std::size_t k) { recs[k] = thermo::clausius_function(ic, cfg.bath_at_log_ratio(sweep[k / nt]), times[k % nt]); },
        ex);
    FigureResult r;
    r.data.columns = {"t", "log10_ratio", "F", "violation"};
    for (std::size_t k = 0; k < recs.size(); ++k) {
        note_projection(r, recs[k].projected, recs[k].min_eigenvalue);
        r.data.rows.push_back({times[k % nt], sweep[k / nt], recs[k].F, recs[k].violation});
    }
    return r;
}

FigureResult fig3b(const RunConfig& cfg, Execution ex) {
    if (cfg.c2_sq) {
        throw error(errc::invalid_parameter, "c2_sq: fig3b sweeps c2_sq itself");
    }
    const int n = cfg.grid_n.value_or(60);
    const std::vector<double> logs = make_grid(8.0, 24.0, n, Spacing::linear);
    std::vector<double> c2s(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        c2s[static_cast<std::size_t>(j)] = static_cast<double>(j + 1) / static_cast<double>(n + 1);
    }
    const std::size_t nc = c2s.size();
    std::vector<double> f(logs.size() * nc);
    for_each_index(
        f.size(),
        [&](std::size_t k) {
            const InterferometerConfig ic = InterferometerConfig::from_c2_sq(c2s[k % nc], cfg.phi, cfg.delta);
            const double x = cfg.bath_at_log_ratio(logs[k / nc]).hbar_omega_over_kt();
            f[k] = thermo::clausius_infinity(ic, x);
        },
        ex);
    FigureResult r;
    r.data.columns = {"log10_ratio", "c2_sq", "F_infinity"};
    for (std::size_t k = 0; k < f.size(); ++k) {
        r.data.rows.push_back({logs[k / nc], c2s[k % nc], f[k]});
    }
    return r;
}

FigureResult fig4(const RunConfig& cfg, Execution ex) {
    const InterferometerConfig ic = cfg.interferometer(0.6);
    require_open_c2(ic, "fig4");
    const std::vector<double> sweep = cfg.sweep_log10.value_or(fig4_sweep);
    const std::vector<double> times = time_grid(cfg, 1e-10, 1e-5, 200, Spacing::log);
    const std::size_t nt = times.size();
    std::vector<interferometer::AuditedState> states(sweep.size() * nt, {DensityMatrix(CMatrix::Identity(1, 1)), 0.0, false});
    std::vector<double> cd(states.size());
    for_each_index(
        cd.size(),
        [&](std::size_t k) {
            states[k] = interferometer::closed_form_audit_state(ic, cfg.bath_at_log_ratio(sweep[k / nt]), times[k % nt]);
            cd[k] = coherence::distillable_coherence(states[k].state);
        },
        ex);
    FigureResult r;
    r.data.columns = {"t", "log10_ratio", "C_d"};
    for (std::size_t k = 0; k < cd.size(); ++k) {
        note_projection(r, states[k].projected, states[k].min_eigenvalue);
        r.data.rows.push_back({times[k % nt], sweep[k / nt], cd[k]});
    }
    return r;
}

FigureResult fig5(const RunConfig& cfg, Execution ex) {
    const InterferometerConfig ic = cfg.interferometer(0.5);
    require_open_c2(ic, "fig5");
    const std::vector<double> temps = make_grid(0.0, 300.0, cfg.n.value_or(301), Spacing::linear);
    const OperatorMatrix h = coherence::relabeled_hamiltonian(cfg.omega);
    std::vector<double> w(temps.size());
    for_each_index(
        w.size(),
        [&](std::size_t k) {
            const double nbar = bath::mean_occupation(cfg.omega, temps[k]);
            const DensityMatrix rho(interferometer::closed_form_matrix(ic, nbar, 0.0));
            w[k] = coherence::ergotropy(rho, h) * bath::PhysicalConstants::hbar;
        },
        ex);
    FigureResult r;
    r.data.columns = {"T", "W", "neg_log_scaled_W"};
    for (std::size_t k = 0; k < w.size(); ++k) {
        r.data.rows.push_back({temps[k], w[k], -std::log(w[k] * 1e31)});
    }
    return r;
}

} // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids{"fig2a", "fig2b", "fig3a", "fig3b", "fig4", "fig5"};
    return ids;
}

std::vector<double> make_grid(double lo, double hi, int n, Spacing spacing) {
    if (n < 1) {
        throw error(errc::invalid_parameter, "n: grid needs at least one point");
    }
    if (n == 1) {
        return {lo};
    }
    std::vector<double> g(static_cast<std::size_t>(n));
    const double span = static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / span;
        g[static_cast<std::size_t>(i)] = spacing == Spacing::log
                                             ? std::pow(10.0, std::log10(lo) + f * (std::log10(hi) - std::log10(lo)))
                                             : lo + f * (hi - lo);
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

std::vector<double> time_grid(const RunConfig& cfg, double t_min, double t_max, int n, Spacing spacing) {
    const double lo = cfg.t_min.value_or(t_min);
    const double hi = cfg.t_max.value_or(t_max);
    const Spacing sp = cfg.spacing.value_or(spacing);
    if (!(hi > lo)) {
        throw error(errc::invalid_parameter, "t_max: must exceed t_min");
    }
    if (sp == Spacing::log && !(lo > 0.0)) {
        throw error(errc::invalid_parameter, "t_min: must be positive for log spacing");
    }
    return make_grid(lo, hi, cfg.n.value_or(n), sp);
}

FigureResult run_figure(const std::string& id, const RunConfig& cfg, Execution ex) {
    if (id == "fig2a") {
        return fig2a(cfg, ex);
    }
    if (id == "fig2b") {
        return fig2b(cfg, ex);
    }
    if (id == "fig3a") {
        return fig3a(cfg, ex);
    }
    if (id == "fig3b") {
        return fig3b(cfg, ex);
    }
    if (id == "fig4") {
        return fig4(cfg, ex);
    }
    if (id == "fig5") {
        return fig5(cfg, ex);
    }
    throw error(errc::invalid_parameter, "unknown figure id '" + id + "'");
}

} // namespace clausius::app
