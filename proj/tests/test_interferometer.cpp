#include "clausius/errors.hpp"
#include "clausius/interferometer.hpp"
#include "clausius/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace clausius;
using namespace clausius::interferometer;
using hilbert::max_abs;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr complex I{0.0, 1.0};

bath::BathSpec spec_at(double log10_ratio) {
    return bath::BathSpec::from_ratio(1.5e-3, 10.0, 1e12, bath::temperature_from_log_ratio(1e12, log10_ratio));
}

CVector unit(int k) {
    CVector v = CVector::Zero(4);
    v(k) = 1.0;
    return v;
}

} // namespace

TEST_CASE("config") {
    const InterferometerConfig c(complex(0.6, 0.0), complex(0.0, 0.8), 0.3, 6.0);
    CHECK(c.z() == doctest::Approx(0.48));
    CHECK(c.theta() == doctest::Approx(-std::numbers::pi / 2.0));
    CHECK_THROWS_AS(InterferometerConfig(1.0, 1.0, 0.0, 6.0), error);
    CHECK_THROWS_AS((void)InterferometerConfig::from_c2_sq(1.2, 0.0), error);
    CHECK_THROWS_AS(InterferometerConfig(1.0, 0.0, std::nan(""), 6.0), error);
    CHECK(DecoherenceFactor::at(2.0, 1.0, 0.0).eta == 1.0);
    CHECK(DecoherenceFactor::at(2.0, 1.0, inf).eta == 0.0);
    CHECK(DecoherenceFactor::at(2.0, 1.0, 0.5).eta == doctest::Approx(std::exp(-3.0)));
    CHECK_THROWS_AS((void)DecoherenceFactor::at(2.0, 1.0, -1.0), error);
}

TEST_CASE("gates") {
    const auto [u1, u2] = gates_u1_u2();
    CHECK(max_abs(u1 * unit(1) - unit(2)) == 0.0);
    CHECK(max_abs(u2 * unit(1) - unit(3)) == 0.0);
    CHECK(max_abs(u1 * u1.adjoint() - CMatrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs(u2 * u2.adjoint() - CMatrix::Identity(4, 4)) == 0.0);
    CHECK(max_abs(u1 * u1 - CMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("initial state") {
    const CVector a = initial_state(InterferometerConfig::from_c2_sq(0.0, 0.4));
    CHECK(std::abs(a(0) - 1.0) == 0.0);
    CHECK(std::abs(a(1)) == 0.0);
    CHECK(std::abs(a(2)) == 0.0);

    const CVector b = initial_state(InterferometerConfig::from_c2_sq(0.5, 0.0));
    CHECK(std::abs(b(0) - 1.0 / std::numbers::sqrt2) < 1e-15);
    CHECK(std::abs(b(1) - 0.5) < 1e-15);
    CHECK(std::abs(b(2) - 0.5 * I) < 1e-15);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        const auto cfg = InterferometerConfig(std::polar(std::sqrt(0.3), 2.0 * u(rng)), std::polar(std::sqrt(0.7), 5.0 * u(rng)),
                                              6.0 * u(rng), 6.0);
        CHECK(initial_state(cfg).norm() == doctest::Approx(1.0).epsilon(1e-15));
        const DensityMatrix rho = initial_density(cfg);
        CHECK(rho.purity() == doctest::Approx(1.0).epsilon(1e-14));
        const complex c1 = cfg.c1();
        const complex c2 = cfg.c2();
        const double phi = cfg.phi();
        CHECK(std::abs(rho(0, 1) - c1 * std::conj(c2) * std::exp(-I * phi) / std::numbers::sqrt2) < 1e-15);
        CHECK(std::abs(rho(1, 2) - (-I) * cfg.c2_sq() * std::exp(I * phi) / 2.0) < 1e-15);
    }
}

TEST_CASE("beamsplitter") {
    const DensityMatrix out = apply_bs3(initial_density(InterferometerConfig::from_c2_sq(0.5, 0.0)));
    CMatrix want(3, 3);
    want << 0.5, 0.0, -0.5 * I, 0.0, 0.0, 0.0, 0.5 * I, 0.0, 0.5;
    CHECK(max_abs(out.matrix() - want) < 1e-15);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix rho = hilbert::random_density_matrix(3, rng);
        const DensityMatrix once = apply_bs3(rho);
        const DensityMatrix twice = apply_bs3(once);
        const RVector a = hilbert::eig_hermitian(rho.matrix()).values;
        CHECK((a - hilbert::eig_hermitian(once.matrix()).values).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(std::abs(twice.matrix().trace() - 1.0) < 1e-14);
        CHECK(max_abs(twice.matrix() - rho.matrix()) > 1e-6);
    }
    CHECK_THROWS_AS((void)apply_bs3(DensityMatrix(CMatrix::Identity(2, 2) / 2.0)), error);
}

TEST_CASE("closed form endpoints") {
    for (double c2 : {0.1, 0.5, 0.9}) {
        for (double phi : {0.0, 1.0, 2.5}) {
            const auto cfg = InterferometerConfig::from_c2_sq(c2, phi);
            const CMatrix bs3 = apply_bs3(initial_density(cfg)).matrix();
            for (double log10_ratio : {9.52, 12.0, 23.0}) {
                const auto spec = spec_at(log10_ratio);
                CHECK(max_abs(closed_form_state(cfg, spec, 0.0).matrix() - bs3) < 1e-12);
                const double nbar = bath::asymptotic_rates(spec).nbar;
                const CMatrix late = closed_form_matrix(cfg, nbar, 0.0);
                CHECK(max_abs(late - oracles::explicit_asymptotic_state(1.0 - c2, c2, nbar)) < 1e-15);
                CHECK(std::abs(late(1, 2) + I * c2 / (2.0 * (2.0 * nbar + 1.0))) < 1e-15);
                CHECK(std::abs(late.trace() - 1.0) < 1e-15);
            }
        }
    }
    // phi = 0, t = 0: everything leaves through two ports.
    const auto rho0 = closed_form_state(InterferometerConfig::from_c2_sq(0.3, 0.0), spec_at(9.52), 0.0);
    CHECK(rho0(0, 0).real() == doctest::Approx(0.7));
    CHECK(std::abs(rho0(1, 1)) < 1e-16);
    CHECK(rho0(2, 2).real() == doctest::Approx(0.3));
}

TEST_CASE("closed form time dependence") {
    const auto cfg = InterferometerConfig::from_c2_sq(0.4, 0.8);
    const double nbar = 2.0;
    const double e1 = 0.64;
    const double e2 = 0.09;
    const CMatrix a = closed_form_matrix(cfg, nbar, e1);
    const CMatrix b = closed_form_matrix(cfg, nbar, e2);
    CHECK(std::abs(a(0, 1) / b(0, 1) - std::sqrt(e1 / e2)) < 1e-13);
    CHECK(std::abs(a(0, 2) / b(0, 2) - std::sqrt(e1 / e2)) < 1e-13);
    CHECK(std::abs(a(1, 2).real() / b(1, 2).real() - e1 / e2) < 1e-13);

    // Room temperature: entropy grows monotonically.
    const auto spec = spec_at(9.52);
    double last = -1.0;
    for (int k = 0; k <= 100; ++k) {
        const double t = 1e-10 * std::pow(1e5, k / 100.0);
        const double s = hilbert::von_neumann_entropy(closed_form_state(cfg, spec, t));
        CHECK(s >= last - 1e-12);
        last = s;
    }
}

TEST_CASE("closed form leaves the state space below nbar one half") {
    const auto cfg = InterferometerConfig::from_c2_sq(0.5, 0.0);
    const auto cold = spec_at(23.0);
    const double gamma = bath::asymptotic_rates(cold).Gamma;
    const double t_mid = std::log(2.0) / gamma;
    try {
        (void)closed_form_state(cfg, cold, t_mid);
        FAIL("expected model-inconsistency");
    } catch (const error& e) {
        CHECK(e.code() == errc::model_inconsistency);
    }
    const AuditedState st = closed_form_audit_state(cfg, cold, t_mid);
    CHECK(st.projected);
    CHECK(st.min_eigenvalue < -1e-3);
    CHECK(hilbert::eig_hermitian(st.state.matrix()).values.minCoeff() >= -1e-15);
    CHECK_FALSE(closed_form_audit_state(cfg, spec_at(9.52), t_mid).projected);
}

TEST_CASE("interference pattern") {
    const auto cfg = InterferometerConfig::from_c2_sq(0.5, 0.0);
    const double omega = 1e12;
    const double d = cfg.delta() / std::sqrt(omega);

    const auto cold = spec_at(23.0);
    for (double p : {-3e6, -1e5, 0.0, 2.2e5, 1e6}) {
        const double want = pattern_envelope(omega, p) * (1.0 - cfg.c2_sq() * std::sin(p * d));
        CHECK(interference_pattern(cfg, cold, inf, p) == doctest::Approx(want).epsilon(1e-13));
    }

    // Very hot bath: every fringe term is gone at t = inf.
    const auto hot = bath::BathSpec::from_ratio(1.5e-3, 10.0, 1e12, 1e12);
    for (double p : {-3e6, 0.0, 1e6}) {
        CHECK(interference_pattern(cfg, hot, inf, p) == doctest::Approx(pattern_envelope(omega, p)).epsilon(1e-10));
    }

    const auto room = spec_at(9.52);
    const double w = std::sqrt(omega);
    for (double t : {0.0, 1e-9, 1e-8, 1e-7, inf}) {
        for (int k = 0; k <= 400; ++k) {
            CHECK(interference_pattern(cfg, room, t, -6.0 * w + 12.0 * w * k / 400.0) >= 0.0);
        }
    }

    const double nbar = bath::asymptotic_rates(room).nbar;
    for (double phi : {0.0, 1.3}) {
        const auto c = InterferometerConfig::from_c2_sq(0.3, phi);
        for (double t : {0.0, 1e-8, inf}) {
            const double eta = DecoherenceFactor::at(room, t).eta;
            CHECK(std::abs(oracles::pattern_norm_numeric(c, room, t) - oracles::pattern_norm_analytic(c, nbar, eta)) < 1e-8);
        }
    }

    CHECK(decaying_fringe_amplitude(cfg, room, 0.0) > 0.5);
    CHECK(decaying_fringe_amplitude(cfg, room, 1e-7) < 1e-3);
    CHECK(decaying_fringe_amplitude(cfg, room, inf) == 0.0);
}
