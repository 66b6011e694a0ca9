#include "clausius/verify.hpp"

#include "clausius/coherence.hpp"
#include "clausius/csv.hpp"
#include "clausius/dynamics.hpp"
#include "clausius/figures.hpp"
#include "clausius/oracles.hpp"
#include "clausius/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>

namespace clausius::app {

namespace {

using interferometer::InterferometerConfig;

constexpr double inf = std::numeric_limits<double>::infinity();
const double c2_grid[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const double nbar_grid[] = {0.0, 0.5, 1.0, 5.0, 40.0};

class Recorder {
public:
    explicit Recorder(VerifyReport& r) : r_(r) {}

    /// Passes when metric <= bound.
    void at_most(const std::string& name, double metric, double bound) {
        r_.lines.push_back({name, metric <= bound ? CheckStatus::pass : CheckStatus::fail, metric});
    }
    void at_least(const std::string& name, double metric, double bound) {
        r_.lines.push_back({name, metric >= bound ? CheckStatus::pass : CheckStatus::fail, metric});
    }
    void info(const std::string& name, double metric) { r_.lines.push_back({name, CheckStatus::info, metric}); }

private:
    VerifyReport& r_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min()); }

void clausius_checks(Recorder& rec, const RunConfig& cfg) {
    const InterferometerConfig ic = cfg.interferometer(0.5);
    const std::vector<double> times = make_grid(1e-10, 1e-5, 200, Spacing::log);
    double min_f = inf;
    const bath::BathSpec room = cfg.bath_at_log_ratio(9.52);
    for (double t : times) {
        min_f = std::min(min_f, thermo::clausius_function(ic, room, t).F);
    }
    min_f = std::min(min_f, thermo::clausius_function(ic, room, inf).F);
    rec.at_least("clausius_room_temperature_min_F", min_f, 0.0);
    rec.at_most("clausius_low_temperature_F_infinity", thermo::clausius_function(ic, cfg.bath_at_log_ratio(23.0), inf).F,
                -1e10);

    const InterferometerConfig balanced = InterferometerConfig::from_c2_sq(0.5, 0.0, cfg.delta);
    const double x_star = thermo::violation_crossover(balanced);
    rec.at_most("crossover_relative_offset", rel(x_star, 8.0 * std::numbers::ln2), 0.05);
    double worst_rise = -inf;
    const std::vector<double> xs = make_grid(0.1, 100.0, 50, Spacing::log);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        worst_rise = std::max(worst_rise,
                              thermo::clausius_infinity(balanced, xs[i]) - thermo::clausius_infinity(balanced, xs[i - 1]));
    }
    rec.at_most("f_infinity_monotone_max_rise", worst_rise, 0.0);
}

void endpoint_checks(Recorder& rec, const VerifyOptions& opts) {
    double t0 = 0.0;
    for (double c2 : {0.2, 0.5, 0.8}) {
        for (double phi : {0.0, 0.7, std::numbers::pi / 2.0, 2.5}) {
            const InterferometerConfig ic = InterferometerConfig::from_c2_sq(c2, phi);
            const CMatrix want = oracles::bs3_conjugated_pure_state(ic);
            for (double nbar : nbar_grid) {
                t0 = std::max(t0, hilbert::max_abs(opts.builder(ic, nbar, 1.0) - want));
            }
        }
    }
    rec.at_most("closed_form_t0_vs_bs3_state", t0, 1e-12);

    double t_inf = 0.0;
    double s_inf = 0.0;
    for (double c2 : c2_grid) {
        const InterferometerConfig ic = InterferometerConfig::from_c2_sq(c2, 0.0);
        for (double nbar : nbar_grid) {
            const CMatrix m = opts.builder(ic, nbar, 0.0);
            t_inf = std::max(t_inf, hilbert::max_abs(m - oracles::explicit_asymptotic_state(1.0 - c2, c2, nbar)));
            s_inf = std::max(s_inf, std::abs(oracles::jacobi_entropy(m) - thermo::entropy_infinity(c2, nbar)));
        }
    }
    rec.at_most("closed_form_infinity_vs_explicit_state", t_inf, 1e-12);
    rec.at_most("entropy_infinity_vs_eigen_entropy", s_inf, 1e-10);
}

void ergotropy_checks(Recorder& rec, const RunConfig& cfg) {
    const OperatorMatrix h = coherence::relabeled_hamiltonian(1.0);
    double worst = 0.0;
    for (double c2 : c2_grid) {
        const InterferometerConfig ic = InterferometerConfig::from_c2_sq(c2, 0.0);
        for (double nbar : nbar_grid) {
            if (!coherence::population_ordering_regime(c2, nbar)) {
                continue;
            }
            const DensityMatrix rho(interferometer::closed_form_matrix(ic, nbar, 0.0));
            worst = std::max(worst, rel(coherence::ergotropy(rho, h), coherence::ergotropy_closed_form(c2, nbar, 1.0)));
        }
    }
    rec.at_most("ergotropy_closed_form_relative", worst, 1e-12);

    std::mt19937_64 rng(cfg.seed);
    double gap = 0.0;
    for (int i = 0; i < 500; ++i) {
        const DensityMatrix rho = hilbert::random_density_matrix(3, rng);
        gap = std::max(gap, std::abs(oracles::brute_force_ergotropy(rho.matrix(), h) - coherence::ergotropy(rho, h)));
    }
    rec.at_most("ergotropy_permutation_oracle", gap, 1e-12);
}

void pattern_checks(Recorder& rec, const RunConfig& cfg) {
    const InterferometerConfig balanced = InterferometerConfig::from_c2_sq(0.5, 0.0, cfg.delta);
    const bath::BathSpec room = cfg.bath_at_log_ratio(9.52);
    rec.at_most("fringe_amplitude_room_temperature_1e-7s", interferometer::decaying_fringe_amplitude(balanced, room, 1e-7),
                1e-3);

    const bath::BathSpec cold = cfg.bath_at_log_ratio(23.0);
    const double nbar = bath::mean_occupation(cold.omega(), cold.temperature());
    const double d = cfg.delta / std::sqrt(cold.omega());
    double residual = 0.0;
    for (double p : {std::numbers::pi / (2.0 * d), -std::numbers::pi / (2.0 * d)}) {
        const double ratio = interferometer::interference_pattern(balanced, cold, inf, p) /
                             interferometer::pattern_envelope(cold.omega(), p);
        residual = std::max(residual, std::abs(std::abs(ratio - 1.0) - balanced.c2_sq() / (2.0 * nbar + 1.0)));
    }
    rec.at_most("fringe_residual_low_temperature", residual, 1e-10);

    const double room_nbar = bath::mean_occupation(room.omega(), room.temperature());
    double norm_gap = 0.0;
    for (double phi : {0.0, 0.9, 2.0}) {
        const InterferometerConfig ic = InterferometerConfig::from_c2_sq(0.5, phi, cfg.delta);
        for (double t : {0.0, 1e-9, 1e-8, inf}) {
            const double eta = interferometer::DecoherenceFactor::at(room, t).eta;
            const double expected = oracles::pattern_norm_analytic(ic, room_nbar, eta);
            norm_gap = std::max(norm_gap, std::abs(oracles::pattern_norm_numeric(ic, room, t) - expected));
        }
    }
    rec.at_most("pattern_norm_vs_analytic", norm_gap, 1e-8);

    double lowest = inf;
    const double w = std::sqrt(room.omega());
    for (double t : make_grid(1e-9, 1e-7, 3, Spacing::log)) {
        for (double p : make_grid(-6.0 * w, 6.0 * w, 401, Spacing::linear)) {
            lowest = std::min(lowest, interferometer::interference_pattern(balanced, room, t, p));
        }
    }
    rec.at_least("pattern_nonnegative_min", lowest, 0.0);
}

void coherence_checks(Recorder& rec, const RunConfig& cfg, std::size_t& projected) {
    const InterferometerConfig ic = InterferometerConfig::from_c2_sq(0.6, 0.0, cfg.delta);
    const std::vector<double> temps{9.52, 10.0, 11.0, 12.0, 23.0};
    const std::vector<double> times = make_grid(1e-10, 1e-5, 200, Spacing::log);
    std::vector<std::vector<double>> cd(temps.size(), std::vector<double>(times.size()));
    for (std::size_t a = 0; a < temps.size(); ++a) {
        const bath::BathSpec spec = cfg.bath_at_log_ratio(temps[a]);
        for (std::size_t k = 0; k < times.size(); ++k) {
            const auto st = interferometer::closed_form_audit_state(ic, spec, times[k]);
            projected += st.projected ? 1 : 0;
            cd[a][k] = coherence::distillable_coherence(st.state);
        }
    }
    double rise = -inf;
    for (const auto& row : cd) {
        for (std::size_t k = 1; k < row.size(); ++k) {
            rise = std::max(rise, row[k] - row[k - 1]);
        }
    }
    rec.at_most("coherence_nonincreasing_max_rise", rise, 1e-12);
    double order = inf;
    for (std::size_t a = 1; a < temps.size(); ++a) {
        for (std::size_t k = 0; k < times.size(); ++k) {
            order = std::min(order, cd[a][k] - cd[a - 1][k]);
        }
    }
    rec.at_least("coherence_temperature_order_min_gap", order, -1e-12);

    const coherence::PostulateReport pr =
        coherence::coherence_postulate_suite(coherence::distillable_coherence, 200, cfg.seed);
    for (const auto& r : pr.results) {
        std::string name = "postulate_" + r.name;
        std::replace(name.begin(), name.end(), ' ', '_');
        rec.at_least(name, r.worst_margin, -coherence::postulate_tolerance);
    }

    std::mt19937_64 rng(cfg.seed + 1);
    double eig_gap = 0.0;
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = hilbert::random_density_matrix(3, rng);
        const RVector a = hilbert::eig_hermitian(rho.matrix()).values;
        const std::vector<double> b = oracles::jacobi_eigenvalues(rho.matrix());
        for (Eigen::Index k = 0; k < a.size(); ++k) {
            eig_gap = std::max(eig_gap, std::abs(a(k) - b[static_cast<std::size_t>(k)]));
        }
    }
    rec.at_most("eigensolver_vs_jacobi", eig_gap, 1e-12);
}

void dynamics_checks(Recorder& rec, const RunConfig& cfg) {
    const bath::RateSet rates = bath::asymptotic_rates(cfg.bath());
    const auto gen = dynamics::LindbladGenerator::markovian(2, rates);
    const double scale = rates.Gamma * (2.0 * rates.nbar + 1.0);
    const std::vector<double> times = make_grid(0.1 / scale, 5.0 / scale, 50, Spacing::linear);
    CMatrix rho0(2, 2);
    rho0 << 0.3, complex(0.2, -0.1), complex(0.2, 0.1), 0.7;
    const DensityMatrix start(rho0);
    const dynamics::Trajectory tr = dynamics::evolve(start, gen, times);
    double pop = 0.0;
    double coh = 0.0;
    for (const auto& pt : tr.points) {
        const auto exact = oracles::two_level_markov(0.7, rho0(0, 1), rates.Gamma, rates.nbar, pt.t);
        pop = std::max(pop, rel(pt.rho(1, 1).real(), exact.p_excited));
        coh = std::max(coh, std::abs(pt.rho(0, 1) - exact.coherence) / std::abs(exact.coherence));
    }
    rec.at_most("two_level_population_relative", pop, 1e-6);
    rec.at_most("two_level_coherence_relative", coh, 1e-6);
    rec.at_most("two_level_trace_drift", tr.max_trace_drift, 1e-8);

    const double long_t[] = {40.0 / scale};
    const auto settled = dynamics::evolve(start, gen, long_t);
    rec.at_most("two_level_steady_population",
                rel(settled.points.back().rho(1, 1).real(), oracles::two_level_steady_population(rates.nbar)), 1e-6);

    dynamics::EvolveOptions half;
    half.step_fraction = 0.005;
    const dynamics::Trajectory fine = dynamics::evolve(start, gen, times, half);
    double halving = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
        halving = std::max(halving, hilbert::max_abs(tr.points[k].rho.matrix() - fine.points[k].rho.matrix()));
    }
    rec.at_most("rk4_step_halving", halving, 1e-8);
}

void bath_checks(Recorder& rec, const RunConfig& cfg) {
    const bath::BathSpec spec = cfg.bath();
    const bath::RateSet asym = bath::asymptotic_rates(spec);
    const double lambda = spec.cutoff();
    const std::vector<double> grid = make_grid(0.0, 20.0 / lambda, 201, Spacing::linear);
    const std::vector<bath::Coefficients> co = bath::time_dependent_coefficients(spec, grid, Execution::serial);
    rec.at_most("bath_Delta_asymptote_relative", rel(co.back().Delta, asym.Delta), 0.02);
    rec.at_most("bath_gamma_asymptote_relative", rel(co.back().gamma, asym.gamma), 0.02);
    double lowest = inf;
    for (std::size_t k = 1; k < co.size(); ++k) {
        lowest = std::min({lowest, (co[k].Delta + co[k].gamma) / asym.Delta, (co[k].Delta - co[k].gamma) / asym.Delta});
    }
    rec.at_least("bath_Delta_pm_gamma_min_scaled", lowest, std::numeric_limits<double>::min());

    double mu = 0.0;
    for (double s : {0.05, 0.2, 1.0, 3.0, 8.0}) {
        mu = std::max(mu, rel(bath::dissipation_kernel_quadrature(spec, s / lambda), bath::dissipation_kernel(spec, s / lambda)));
    }
    rec.at_most("dissipation_kernel_quadrature_relative", mu, 1e-6);

    double d_gap = 0.0;
    double g_gap = 0.0;
    for (std::size_t k : {std::size_t{10}, std::size_t{50}, std::size_t{200}}) {
        d_gap = std::max(d_gap, rel(co[k].Delta, oracles::delta_swapped_order(spec, grid[k])));
        g_gap = std::max(g_gap, rel(co[k].gamma, oracles::gamma_closed_form(spec, grid[k])));
    }
    rec.at_most("bath_Delta_vs_swapped_order", d_gap, 1e-6);
    double order_gap = 0.0;
    for (double s : {0.5, 2.0}) {
        order_gap = std::max(order_gap, rel(bath::diffusion_coefficient(spec, s / lambda), oracles::delta_time_order(spec, s / lambda)));
    }
    rec.at_most("bath_Delta_vs_time_order", order_gap, 1e-6);
    rec.at_most("bath_gamma_vs_closed_form", g_gap, 1e-8);
}

void consistency_info(Recorder& rec, const RunConfig& cfg, std::size_t projected) {
    const InterferometerConfig ic = cfg.interferometer(0.5);
    const thermo::ConsistencyReport r = thermo::consistency_report(ic, cfg.bath(), 0.0);
    rec.info("quadrature_x2_gap_t0", r.x2_gap);
    rec.info("quadrature_p2_gap_t0", r.p2_gap);
    const thermo::ConsistencyReport late = thermo::consistency_report(ic, cfg.bath(), 1e-7);
    rec.info("heat_gap_closed_vs_integrated_1e-7s", late.heat_gap);
    rec.info("closed_form_projected_states", static_cast<double>(projected));
    const double eta_mid = 0.5;
    const auto lo = hilbert::eig_hermitian(interferometer::closed_form_matrix(ic, 0.0, eta_mid)).values.minCoeff();
    rec.info("closed_form_min_eigenvalue_nbar0_eta0.5", lo);
}

} // namespace

bool VerifyReport::passed() const {
    return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == CheckStatus::fail; });
}

int VerifyReport::exit_code() const { return passed() ? 0 : 1; }

const CheckLine* VerifyReport::find(const std::string& name) const {
    for (const auto& l : lines) {
        if (l.name == name) {
            return &l;
        }
    }
    return nullptr;
}

VerifyReport run_verify(const RunConfig& cfg, const VerifyOptions& opts) {
    VerifyReport report;
    Recorder rec(report);
    std::size_t projected = 0;
    endpoint_checks(rec, opts);
    clausius_checks(rec, cfg);
    pattern_checks(rec, cfg);
    coherence_checks(rec, cfg, projected);
    ergotropy_checks(rec, cfg);
    dynamics_checks(rec, cfg);
    bath_checks(rec, cfg);
    consistency_info(rec, cfg, projected);
    return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
    for (const auto& l : report.lines) {
        const char* status = l.status == CheckStatus::pass ? "pass" : l.status == CheckStatus::fail ? "fail" : "info";
        out << l.name << ' ' << status << ' ' << format_number(l.metric) << '\n';
    }
}

} // namespace clausius::app
