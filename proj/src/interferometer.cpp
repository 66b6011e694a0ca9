#include "clausius/interferometer.hpp"

#include "clausius/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace clausius::interferometer {

namespace {
constexpr complex I{0.0, 1.0};
}

InterferometerConfig::InterferometerConfig(complex c1, complex c2, double phi, double delta)
    : c1_(c1), c2_(c2), phi_(phi), delta_(delta) {
    const double n = std::norm(c1) + std::norm(c2);
    if (std::abs(n - 1.0) > norm_tolerance) {
        throw error(errc::invalid_parameter, "|C1|^2 + |C2|^2 must be 1");
    }
    if (!std::isfinite(phi) || !std::isfinite(delta)) {
        throw error(errc::invalid_parameter, "phi and delta must be finite");
    }
}

InterferometerConfig InterferometerConfig::from_c2_sq(double c2_sq, double phi, double delta) {
    if (!(c2_sq >= 0.0 && c2_sq <= 1.0)) {
        throw error(errc::invalid_parameter, "c2_sq must lie in [0, 1]");
    }
    return InterferometerConfig(std::sqrt(1.0 - c2_sq), std::sqrt(c2_sq), phi, delta);
}

DecoherenceFactor DecoherenceFactor::at(double Gamma, double nbar, double t) {
    if (!(t >= 0.0)) {
        throw error(errc::invalid_parameter, "time must be >= 0");
    }
    if (std::isinf(t)) {
        return {Gamma > 0.0 ? 0.0 : 1.0};
    }
    return {std::exp(-Gamma * t * (2.0 * nbar + 1.0))};
}

DecoherenceFactor DecoherenceFactor::at(const bath::BathSpec& spec, double t) {
    const bath::RateSet r = bath::asymptotic_rates(spec);
    return at(r.Gamma, r.nbar, t);
}

std::pair<OperatorMatrix, OperatorMatrix> gates_u1_u2() {
    OperatorMatrix u1 = OperatorMatrix::Zero(4, 4);
    u1(0, 0) = u1(1, 2) = u1(2, 1) = u1(3, 3) = 1.0;
    OperatorMatrix u2 = OperatorMatrix::Zero(4, 4);
    u2(0, 0) = u2(1, 3) = u2(2, 2) = u2(3, 1) = 1.0;
    return {u1, u2};
}

CVector initial_state(const InterferometerConfig& cfg) {
    CVector psi(3);
    psi << cfg.c1(), cfg.c2() * std::exp(I * cfg.phi()) / std::numbers::sqrt2, I * cfg.c2() / std::numbers::sqrt2;
    return psi;
}

DensityMatrix initial_density(const InterferometerConfig& cfg) {
    const CVector psi = initial_state(cfg);
    return DensityMatrix(psi * psi.adjoint());
}

OperatorMatrix bs3_matrix() {
    OperatorMatrix v = OperatorMatrix::Zero(3, 3);
    const double s = 1.0 / std::numbers::sqrt2;
    v(0, 0) = 1.0;
    v(1, 1) = v(2, 2) = s;
    v(1, 2) = v(2, 1) = I * s;
    return v;
}

DensityMatrix apply_bs3(const DensityMatrix& rho) {
    if (rho.dim() != 3) {
        throw error(errc::dimension_mismatch, "BS3 acts on the 3-level branch space");
    }
    const OperatorMatrix v = bs3_matrix();
    return DensityMatrix(v * rho.matrix() * v.adjoint());
}

CMatrix closed_form_matrix(const InterferometerConfig& cfg, double nbar, double eta) {
    const complex c1 = cfg.c1();
    const complex c2 = cfg.c2();
    const double c2sq = cfg.c2_sq();
    const double phi = cfg.phi();
    const double root = std::sqrt(eta);
    const double m = 2.0 * nbar + 1.0;
    const complex e_minus = std::exp(-I * phi);
    const complex e_plus = std::exp(I * phi);
    const complex c12 = c1 * std::conj(c2);
    const complex c21 = std::conj(c1) * c2;

    CMatrix r(3, 3);
    r(0, 0) = cfg.c1_sq();
    r(0, 1) = c12 / 2.0 * root * (e_minus - 1.0);
    r(0, 2) = -I * c12 / 2.0 * root * (e_minus + 1.0);
    r(1, 0) = c21 / 2.0 * root * (e_plus - 1.0);
    r(1, 1) = c2sq / 2.0 * (1.0 - eta * std::cos(phi));
    r(1, 2) = I * c2sq * ((eta * eta - 1.0) / (2.0 * m)) + c2sq / 2.0 * eta * std::sin(phi);
    r(2, 0) = I * c21 / 2.0 * root * (e_plus + 1.0);
    r(2, 1) = -I * c2sq * ((eta * eta - 1.0) / (2.0 * m)) + c2sq / 2.0 * eta * std::sin(phi);
    r(2, 2) = c2sq / 2.0 * (1.0 + eta * std::cos(phi));
    return r;
}

DensityMatrix closed_form_state(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    const bath::RateSet rates = bath::asymptotic_rates(spec);
    const double eta = DecoherenceFactor::at(rates.Gamma, rates.nbar, t).eta;
    const CMatrix r = closed_form_matrix(cfg, rates.nbar, eta);
    const double lo = hilbert::eig_hermitian(r).values.minCoeff();
    if (lo < -hilbert::positivity_tolerance) {
        std::ostringstream msg;
        msg << "closed form is not positive semidefinite: min eigenvalue " << lo << " at nbar = " << rates.nbar
            << ", eta = " << eta << ", |C2|^2 = " << cfg.c2_sq() << ", phi = " << cfg.phi();
        throw error(errc::model_inconsistency, msg.str());
    }
    return DensityMatrix(r);
}

CMatrix clip_to_state(const CMatrix& m) {
    const hilbert::Spectrum sp = hilbert::eig_hermitian(m);
    RVector vals = sp.values.cwiseMax(0.0);
    vals /= vals.sum();
    return sp.vectors * vals.asDiagonal() * sp.vectors.adjoint();
}

AuditedState closed_form_audit_state(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t) {
    const bath::RateSet rates = bath::asymptotic_rates(spec);
    const double eta = DecoherenceFactor::at(rates.Gamma, rates.nbar, t).eta;
    const CMatrix r = closed_form_matrix(cfg, rates.nbar, eta);
    const double lo = hilbert::eig_hermitian(r).values.minCoeff();
    if (lo < -hilbert::positivity_tolerance) {
        return {DensityMatrix(clip_to_state(r)), lo, true};
    }
    return {DensityMatrix(r), lo, false};
}

FringeCoefficients fringe_coefficients(const InterferometerConfig& cfg, double nbar, double eta) {
    const double z = cfg.z();
    const double th = cfg.theta();
    const double phi = cfg.phi();
    const double root = std::sqrt(eta);
    FringeCoefficients f;
    f.half_cos = z * root * (std::sin(th) - std::cos(th) + std::cos(phi - th) - std::sin(phi - th));
    f.half_sin = z * root * (std::sin(th) - std::cos(th) + std::sin(phi - th) - std::cos(phi - th));
    f.full_cos = cfg.c2_sq() * eta * std::sin(phi);
    f.full_sin = cfg.c2_sq() * (eta * eta - 1.0) / (2.0 * nbar + 1.0);
    return f;
}

double pattern_envelope(double omega, double p) {
    return std::sqrt(1.0 / (omega * std::numbers::pi)) * std::exp(-p * p / omega);
}

double interference_pattern(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t, double p) {
    const bath::RateSet rates = bath::asymptotic_rates(spec);
    const double eta = DecoherenceFactor::at(rates.Gamma, rates.nbar, t).eta;
    const double omega = spec.omega();
    const double d = cfg.delta() / std::sqrt(omega);
    const double z = cfg.z();
    const double th = cfg.theta();
    const double phi = cfg.phi();
    const double pd = p * d;

    const double zterm =
        z * std::sqrt(eta) *
        (std::cos(pd / 2.0) * (std::sin(th) - std::cos(th) + std::cos(phi - th) - std::sin(phi - th)) +
         std::sin(pd / 2.0) * (std::sin(th) - std::cos(th) + std::sin(phi - th) - std::cos(phi - th)));
    const double c2term = cfg.c2_sq() * (eta * std::sin(phi) * std::cos(pd) +
                                         (eta * eta - 1.0) / (2.0 * rates.nbar + 1.0) * std::sin(pd));
    return pattern_envelope(omega, p) * (1.0 + zterm + c2term);
}

double decaying_fringe_amplitude(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t, int n) {
    const double w = std::sqrt(spec.omega());
    const double inf = std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const double p = -6.0 * w + 12.0 * w * k / (n - 1);
        const double gap = interference_pattern(cfg, spec, t, p) - interference_pattern(cfg, spec, inf, p);
        worst = std::max(worst, std::abs(gap) / pattern_envelope(spec.omega(), p));
    }
    return worst;
}

} // namespace clausius::interferometer
