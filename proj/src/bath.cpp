#include "clausius/bath.hpp"

#include "clausius/errors.hpp"
#include "clausius/quadrature.hpp"

#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace clausius::bath {

using quadrature::Oscillator;

BathSpec::BathSpec(double gamma0, double cutoff, double omega, double temperature)
    : gamma0_(gamma0), cutoff_(cutoff), omega_(omega), temperature_(temperature) {
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw error(errc::invalid_parameter, "gamma0 must be positive");
    }
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
        throw error(errc::invalid_parameter, "cutoff must be positive");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw error(errc::invalid_parameter, "omega must be positive");
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw error(errc::invalid_parameter, "temperature must be >= 0");
    }
}

double BathSpec::thermal_frequency() const noexcept {
    return PhysicalConstants::k_boltzmann * temperature_ / PhysicalConstants::hbar;
}

double BathSpec::hbar_omega_over_kt() const noexcept {
    if (temperature_ == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return PhysicalConstants::hbar * omega_ / (PhysicalConstants::k_boltzmann * temperature_);
}

double spectral_density(const BathSpec& spec, double w) {
    if (!(w >= 0.0)) {
        throw error(errc::invalid_parameter, "spectral density needs w >= 0");
    }
    const double l2 = spec.cutoff() * spec.cutoff();
    return 2.0 * spec.gamma0() * w / std::numbers::pi * l2 / (l2 + w * w);
}

double dissipation_kernel(const BathSpec& spec, double tau) {
    if (!(tau > 0.0)) {
        throw error(errc::invalid_parameter, "dissipation kernel needs tau > 0");
    }
    const double l = spec.cutoff();
    return spec.gamma0() * l * l * std::exp(-l * tau);
}

double dissipation_kernel_quadrature(const BathSpec& spec, double tau) {
    if (!(tau > 0.0)) {
        throw error(errc::invalid_parameter, "dissipation kernel needs tau > 0");
    }
    const double l = spec.cutoff();
    const double breaks[] = {0.25 * l, l, 4.0 * l};
    auto j = [&spec](double w) { return spectral_density(spec, w); };
    return quadrature::oscillatory_infinite(j, tau, Oscillator::sine, 20.0 * l, breaks);
}

double noise_cutoff(const BathSpec& spec) {
    return 50.0 * std::max(spec.cutoff(), spec.thermal_frequency());
}

namespace {

// J(w) coth(w / 2 w_T), finite at w -> 0.
double thermal_weighted_density(const BathSpec& spec, double w) {
    const double l2 = spec.cutoff() * spec.cutoff();
    const double pref = 2.0 * spec.gamma0() / std::numbers::pi * l2 / (l2 + w * w);
    const double wt = spec.thermal_frequency();
    if (wt == 0.0) {
        return pref * w;
    }
    const double y = w / (2.0 * wt);
    const double ycoth = y < 1e-4 ? 1.0 + y * y / 3.0 : y / std::tanh(y);
    return pref * 2.0 * wt * ycoth;
}

// Grid points plus breakpoints every two cutoff times, where the
// dissipation kernel has most of its weight.
std::vector<double> time_breakpoints(const BathSpec& spec, std::span<const double> grid) {
    std::vector<double> pts{0.0};
    pts.insert(pts.end(), grid.begin(), grid.end());
    const double t_end = grid.empty() ? 0.0 : grid.back();
    const double step = std::max(2.0 / spec.cutoff(), t_end / 200.0);
    for (double tau = 1.0 / spec.cutoff(); tau < t_end; tau += step) {
        pts.push_back(tau);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

constexpr double outer_rel_tol = 1e-9;

} // namespace

double noise_kernel(const BathSpec& spec, double tau) {
    const double l = spec.cutoff();
    const double wt = spec.thermal_frequency();
    std::vector<double> breaks{0.25 * l, l, 4.0 * l};
    if (wt > 0.0) {
        breaks.insert(breaks.end(), {wt, 4.0 * wt, 16.0 * wt});
    }
    auto g = [&spec](double w) { return thermal_weighted_density(spec, w); };
    const double w_max = noise_cutoff(spec);
    if (std::abs(tau) * w_max < 64.0 * std::numbers::pi) {
        return quadrature::oscillatory_finite(g, tau, Oscillator::cosine, w_max, breaks);
    }
    return quadrature::fourier_finite(g, tau, Oscillator::cosine, w_max, breaks);
}

double diffusion_coefficient(const BathSpec& spec, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw error(errc::invalid_parameter, "diffusion coefficient needs finite t >= 0");
    }
    if (t == 0.0) {
        return 0.0;
    }
    // With g = J coth, the tau integral gives
    //   g(w) [sin((w - W) t) / 2(w - W) + sin((w + W) t) / 2(w + W)].
    // The pole at w = W is removed by subtracting g(W), whose part integrates
    // to sine integrals; the smooth remainders are Fourier integrals in w t.
    const double w0 = spec.omega();
    const double w_max = noise_cutoff(spec);
    const double g0 = thermal_weighted_density(spec, w0);
    const double near = 1e-4 * w0;
    auto h = [&spec, w0, g0, near](double w) {
        const double u = w - w0;
        if (std::abs(u) < near) {
            const double slope =
                (thermal_weighted_density(spec, w0 + near) - thermal_weighted_density(spec, w0 - near)) / (2.0 * near);
            return 0.5 * slope;
        }
        return 0.5 * (thermal_weighted_density(spec, w) - g0) / u;
    };
    auto k = [&spec, w0](double w) { return 0.5 * thermal_weighted_density(spec, w) / (w + w0); };
    const quadrature::Integrand sum = [&](double w) { return k(w) + h(w); };
    const quadrature::Integrand diff = [&](double w) { return k(w) - h(w); };
    const double l = spec.cutoff();
    const double wt = spec.thermal_frequency();
    std::vector<double> breaks{0.25 * l, l, 4.0 * l, w0 - near, w0 + near};
    if (wt > 0.0) {
        breaks.insert(breaks.end(), {wt, 4.0 * wt, 16.0 * wt});
    }
    // Delta / gamma0 tends to pi g(W) / 2; each interval is resolved well below that.
    const double floor = 1e-11 * g0;
    const double sin_part = quadrature::fourier_finite(sum, t, Oscillator::sine, w_max, breaks, 1e-11, floor);
    const double cos_part = quadrature::fourier_finite(diff, t, Oscillator::cosine, w_max, breaks, 1e-11, floor);
    const double pole = 0.5 * g0 * (gsl_sf_Si((w_max - w0) * t) + gsl_sf_Si(w0 * t));
    return spec.gamma0() * (sin_part * std::cos(w0 * t) + cos_part * std::sin(w0 * t) + pole);
}

std::vector<Coefficients> time_dependent_coefficients(const BathSpec& spec, std::span<const double> t_grid,
                                                      Execution ex) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw error(errc::invalid_parameter, "time grid must be increasing and non-negative");
        }
    }
    const std::vector<double> pts = time_breakpoints(spec, t_grid);
    const std::size_t pieces = pts.size() - 1;
    std::vector<double> piece(pieces);
    const double omega = spec.omega();
    const double gamma_floor = 1e-3 * outer_rel_tol * asymptotic_rates(spec).gamma / spec.gamma0();
    auto damping = [&spec, omega](double tau) {
        return tau > 0.0 ? dissipation_kernel(spec, tau) * std::sin(omega * tau) : 0.0;
    };
    for_each_index(
        pieces,
        [&](std::size_t i) {
            piece[i] = quadrature::adaptive(damping, pts[i], pts[i + 1], outer_rel_tol, gamma_floor).value;
        },
        ex);
    std::vector<double> delta(t_grid.size());
    for_each_index(
        t_grid.size(), [&](std::size_t i) { delta[i] = diffusion_coefficient(spec, t_grid[i]); }, ex);

    std::vector<Coefficients> out;
    out.reserve(t_grid.size());
    double acc = 0.0;
    std::size_t next = 0;
    for (std::size_t i = 0; i <= pieces && next < t_grid.size(); ++i) {
        while (next < t_grid.size() && t_grid[next] == pts[i]) {
            out.push_back({delta[next], spec.gamma0() * acc});
            ++next;
        }
        if (i < pieces) {
            acc += piece[i];
        }
    }
    return out;
}

Coefficients time_dependent_coefficients(const BathSpec& spec, double t) {
    const double grid[] = {t};
    return time_dependent_coefficients(spec, grid).front();
}

double mean_occupation(double omega, double temperature) {
    if (!(omega > 0.0) || !(temperature >= 0.0)) {
        throw error(errc::invalid_parameter, "mean_occupation needs omega > 0 and T >= 0");
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    const double x = PhysicalConstants::hbar * omega / (PhysicalConstants::k_boltzmann * temperature);
    return 1.0 / std::expm1(x);
}

double coth_half(double omega, double temperature) {
    if (temperature == 0.0) {
        return 1.0;
    }
    const double x = PhysicalConstants::hbar * omega / (PhysicalConstants::k_boltzmann * temperature);
    return 1.0 / std::tanh(0.5 * x);
}

RateSet asymptotic_rates(const BathSpec& spec) {
    const double r = spec.cutoff_ratio();
    const double g = spec.gamma0() * spec.gamma0() * spec.omega() * r * r / (1.0 + r * r);
    RateSet rates;
    rates.gamma = g;
    rates.Gamma = g;
    rates.Delta = g * coth_half(spec.omega(), spec.temperature());
    rates.nbar = mean_occupation(spec.omega(), spec.temperature());
    return rates;
}

double temperature_from_log_ratio(double omega, double log10_ratio) {
    if (!(omega > 0.0)) {
        throw error(errc::invalid_parameter, "omega must be positive");
    }
    return omega / std::pow(10.0, log10_ratio);
}

CoefficientTable::CoefficientTable(std::vector<double> t_grid, std::vector<Coefficients> values)
    : t_(std::move(t_grid)), v_(std::move(values)) {
    if (t_.empty() || t_.size() != v_.size()) {
        throw error(errc::invalid_parameter, "coefficient table needs matching non-empty grid and values");
    }
    for (const auto& c : v_) {
        max_rate_ = std::max({max_rate_, std::abs(c.Delta), std::abs(c.gamma)});
    }
}

CoefficientTable CoefficientTable::sample(const BathSpec& spec, double t_max, int n, Execution ex) {
    if (n < 4 || !(t_max > 0.0)) {
        throw error(errc::invalid_parameter, "coefficient table needs n >= 4 and t_max > 0");
    }
    // Half the points resolve the transient over the first 40 cutoff times,
    // the rest are spread geometrically out to t_max.
    const double t_fast = std::min(t_max, 40.0 / spec.cutoff());
    const int n_fast = t_fast < t_max ? n / 2 : n;
    std::vector<double> grid;
    for (int i = 0; i < n_fast; ++i) {
        grid.push_back(t_fast * i / (n_fast - 1));
    }
    const int n_slow = n - n_fast;
    for (int i = 1; i <= n_slow; ++i) {
        grid.push_back(t_fast * std::pow(t_max / t_fast, static_cast<double>(i) / n_slow));
    }
    grid.back() = t_max;
    auto values = time_dependent_coefficients(spec, grid, ex);
    return CoefficientTable(std::move(grid), std::move(values));
}

Coefficients CoefficientTable::operator()(double t) const {
    if (t <= t_.front()) {
        return v_.front();
    }
    if (t >= t_.back()) {
        return v_.back();
    }
    const auto it = std::upper_bound(t_.begin(), t_.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - t_.begin());
    const std::size_t lo = hi - 1;
    const double w = (t - t_[lo]) / (t_[hi] - t_[lo]);
    return {v_[lo].Delta + w * (v_[hi].Delta - v_[lo].Delta), v_[lo].gamma + w * (v_[hi].gamma - v_[lo].gamma)};
}

} // namespace clausius::bath
