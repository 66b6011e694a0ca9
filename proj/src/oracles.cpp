#include "clausius/oracles.hpp"

#include "clausius/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace clausius::oracles {

std::vector<double> jacobi_eigenvalues(const CMatrix& a) {
    const Eigen::Index n = a.rows();
    const Eigen::Index m = 2 * n;
    Eigen::MatrixXd s(m, m);
    const Eigen::MatrixXd re = 0.5 * (a + a.adjoint()).real();
    const Eigen::MatrixXd im = 0.5 * (a + a.adjoint()).imag();
    s << re, -im, im, re;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                off += s(p, q) * s(p, q);
            }
        }
        if (off < 1e-30 * std::max(1.0, s.squaredNorm())) {
            break;
        }
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                if (s(p, q) == 0.0) {
                    continue;
                }
                const double theta = (s(q, q) - s(p, p)) / (2.0 * s(p, q));
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double skp = s(k, p);
                    const double skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double spk = s(p, k);
                    const double sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
            }
        }
    }
    std::vector<double> doubled(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) {
        doubled[static_cast<std::size_t>(i)] = s(i, i);
    }
    std::sort(doubled.begin(), doubled.end());
    // Each eigenvalue of the Hermitian matrix appears twice in the embedding.
    std::vector<double> vals;
    for (std::size_t i = 0; i < doubled.size(); i += 2) {
        vals.push_back(0.5 * (doubled[i] + doubled[i + 1]));
    }
    return vals;
}

double jacobi_entropy(const CMatrix& rho) {
    double s = 0.0;
    for (double p : jacobi_eigenvalues(rho)) {
        if (p > 1e-12) {
            s -= p * std::log(p);
        }
    }
    return s;
}

double brute_force_ergotropy(const CMatrix& rho, const CMatrix& hamiltonian) {
    const std::vector<double> vals = jacobi_eigenvalues(rho);
    const double energy = (rho * hamiltonian).trace().real();
    std::vector<std::size_t> perm(vals.size());
    std::iota(perm.begin(), perm.end(), 0);
    double best = -std::numeric_limits<double>::infinity();
    do {
        double e = 0.0;
        for (std::size_t k = 0; k < perm.size(); ++k) {
            e += vals[perm[k]] * hamiltonian(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)).real();
        }
        best = std::max(best, energy - e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double two_level_steady_population(double nbar) { return nbar / (2.0 * nbar + 1.0); }

TwoLevelSolution two_level_markov(double p_excited0, complex coherence0, double Gamma, double nbar, double t) {
    const double rate = Gamma * (2.0 * nbar + 1.0);
    const double p_inf = two_level_steady_population(nbar);
    return {p_inf + (p_excited0 - p_inf) * std::exp(-2.0 * rate * t), coherence0 * std::exp(-rate * t)};
}

double delta_swapped_order(const bath::BathSpec& spec, double t) {
    const double w0 = spec.omega();
    const double w_max = bath::noise_cutoff(spec);
    const double wt = spec.thermal_frequency();
    auto half_sinc = [t](double u) {
        const double ut = u * t;
        return std::abs(ut) < 1e-4 ? 0.5 * t * (1.0 - ut * ut / 6.0) : std::sin(ut) / (2.0 * u);
    };
    auto f = [&](double w) {
        if (w == 0.0) {
            return 0.0;
        }
        double weight = 1.0;
        if (spec.temperature() > 0.0) {
            weight = 1.0 / std::tanh(w / (2.0 * wt));
        }
        return bath::spectral_density(spec, w) * weight * (half_sinc(w - w0) + half_sinc(w + w0));
    };
    std::vector<double> breaks{0.0};
    const double step = std::min(std::numbers::pi / t, w_max / 8.0);
    for (double w = step; w < w_max && breaks.size() < 20000; w += step) {
        breaks.push_back(w);
    }
    breaks.push_back(w0);
    breaks.push_back(w_max);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    // coth(w/2wT) J(w) is finite at 0, but the integrand is evaluated from its
    // limit there to avoid 0 * inf.
    auto g = [&](double w) {
        if (w < 1e-12 * w0 && spec.temperature() > 0.0) {
            return (4.0 * spec.gamma0() * wt / std::numbers::pi) * (half_sinc(-w0) + half_sinc(w0));
        }
        return f(w);
    };
    return spec.gamma0() * quadrature::piecewise(g, breaks, 1e-11).value;
}

double delta_time_order(const bath::BathSpec& spec, double t) {
    const double w0 = spec.omega();
    const double w_max = bath::noise_cutoff(spec);
    const double wt = spec.thermal_frequency();
    const double l = spec.cutoff();
    auto g = [&](double w) {
        const double l2 = l * l;
        const double pref = 2.0 * spec.gamma0() / std::numbers::pi * l2 / (l2 + w * w);
        if (wt == 0.0) {
            return pref * w;
        }
        const double y = w / (2.0 * wt);
        return pref * 2.0 * wt * (y < 1e-6 ? 1.0 : y / std::tanh(y));
    };
    std::vector<double> wbreaks{0.25 * l, l, 4.0 * l};
    if (wt > 0.0) {
        wbreaks.insert(wbreaks.end(), {wt, 4.0 * wt, 16.0 * wt});
    }
    auto kappa_cos = [&](double tau) {
        return quadrature::oscillatory_finite(g, tau, quadrature::Oscillator::cosine, w_max, wbreaks, 1e-11) *
               std::cos(w0 * tau);
    };
    std::vector<double> tbreaks{0.0, t};
    for (double tau = 1.0 / w_max; tau < t; tau *= 4.0) {
        tbreaks.push_back(tau);
    }
    for (double tau = 0.5 / l; tau < t; tau += 0.5 / l) {
        tbreaks.push_back(tau);
    }
    std::sort(tbreaks.begin(), tbreaks.end());
    tbreaks.erase(std::unique(tbreaks.begin(), tbreaks.end()), tbreaks.end());
    return spec.gamma0() * quadrature::piecewise(kappa_cos, tbreaks, 1e-10).value;
}

double gamma_closed_form(const bath::BathSpec& spec, double t) {
    const double l = spec.cutoff();
    const double w = spec.omega();
    const double g0 = spec.gamma0();
    return g0 * g0 * l * l * (w - std::exp(-l * t) * (l * std::sin(w * t) + w * std::cos(w * t))) / (l * l + w * w);
}

CMatrix explicit_asymptotic_state(double c1_sq, double c2_sq, double nbar) {
    const complex i(0.0, 1.0);
    const double off = c2_sq / (2.0 * (2.0 * nbar + 1.0));
    CMatrix r = CMatrix::Zero(3, 3);
    r(0, 0) = c1_sq;
    r(1, 1) = c2_sq / 2.0;
    r(2, 2) = c2_sq / 2.0;
    r(1, 2) = -i * off;
    r(2, 1) = i * off;
    return r;
}

CMatrix bs3_conjugated_pure_state(const interferometer::InterferometerConfig& cfg) {
    const complex i(0.0, 1.0);
    const double r2 = std::numbers::sqrt2;
    CVector psi(3);
    psi << cfg.c1(), cfg.c2() * std::exp(i * cfg.phi()) / r2, i * cfg.c2() / r2;
    CMatrix v = CMatrix::Zero(3, 3);
    v(0, 0) = 1.0;
    v(1, 1) = 1.0 / r2;
    v(1, 2) = i / r2;
    v(2, 1) = i / r2;
    v(2, 2) = 1.0 / r2;
    const CVector out = v * psi;
    CMatrix rho(3, 3);
    for (Eigen::Index a = 0; a < 3; ++a) {
        for (Eigen::Index b = 0; b < 3; ++b) {
            rho(a, b) = out(a) * std::conj(out(b));
        }
    }
    return rho;
}

double pattern_norm_numeric(const interferometer::InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    const double width = std::sqrt(spec.omega());
    auto f = [&](double p) { return interferometer::interference_pattern(cfg, spec, t, p); };
    std::vector<double> breaks;
    for (int k = -48; k <= 48; ++k) {
        breaks.push_back(0.25 * k * width);
    }
    return quadrature::piecewise(f, breaks, 1e-12).value;
}

double pattern_norm_analytic(const interferometer::InterferometerConfig& cfg, double nbar, double eta) {
    const interferometer::FringeCoefficients c = interferometer::fringe_coefficients(cfg, nbar, eta);
    const double d2 = cfg.delta() * cfg.delta();
    // int envelope(P) cos(kP) dP = exp(-k^2 Omega / 4), k = d/2 and k = d
    return 1.0 + c.half_cos * std::exp(-d2 / 16.0) + c.full_cos * std::exp(-d2 / 4.0);
}

} // namespace clausius::oracles
