#include "clausius/errors.hpp"
#include "clausius/oracles.hpp"
#include "clausius/thermo.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

using namespace clausius;
using namespace clausius::thermo;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bath::BathSpec spec_at(double log10_ratio, double gamma0 = 1.5e-3) {
    return bath::BathSpec::from_ratio(gamma0, 10.0, 1e12, bath::temperature_from_log_ratio(1e12, log10_ratio));
}

DensityMatrix diag3(double a, double b, double c) {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return DensityMatrix(m);
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int k = 0; k < n; ++k) {
        g.push_back(lo * std::pow(hi / lo, k / (n - 1.0)));
    }
    return g;
}

} // namespace

TEST_CASE("internal energy") {
    const auto h = hilbert::quadrature_operators(3, 1.0).hamiltonian;
    CHECK(internal_energy(diag3(1, 0, 0), h) == doctest::Approx(0.5));
    CHECK(internal_energy(diag3(0, 1, 0), h) == doctest::Approx(1.5));
    CHECK_THROWS_AS((void)internal_energy(diag3(1, 0, 0), hilbert::quadrature_operators(4, 1.0).hamiltonian), error);
}

TEST_CASE("quadratures") {
    const auto room = spec_at(9.52);
    for (double c2 : {0.2, 0.5, 0.9}) {
        const auto cfg = InterferometerConfig::from_c2_sq(c2, 0.0);
        const auto q = quadratures_closed_form(cfg, room, inf);
        CHECK(q.x2 == doctest::Approx((1.0 + 1.5 * c2) / 2e12).epsilon(1e-14));
        for (double t : log_grid(1e-10, 1e-5, 60)) {
            const auto m = quadratures_closed_form(cfg, room, t);
            CHECK(m.x2 * m.p2 >= 0.25);
        }
    }
    const auto trivial = InterferometerConfig::from_c2_sq(0.0, 0.7);
    for (double t : {0.0, 1e-8, inf}) {
        const auto q = quadratures_closed_form(trivial, room, t);
        CHECK(q.x2 == doctest::Approx(0.5e-12).epsilon(1e-15));
        CHECK(q.p2 == doctest::Approx(0.5e12).epsilon(1e-15));
    }

    const auto vac = quadratures_from_state(diag3(1, 0, 0), 1.0);
    CHECK(vac.x2 == doctest::Approx(0.5));
    CHECK(vac.p2 == doctest::Approx(0.5));
    const auto two = quadratures_from_state(diag3(0, 0, 1), 1.0);
    CHECK(two.x2 == doctest::Approx(2.5));
    CHECK(two.p2 == doctest::Approx(2.5));
    CHECK_THROWS_AS((void)quadratures_from_state(DensityMatrix(CMatrix::Identity(2, 2) / 2.0), 1.0), error);

    // Both routes are reported, not asserted equal.
    const auto r = consistency_report(InterferometerConfig::from_c2_sq(0.5, 0.0), room, 0.0);
    CHECK(std::isfinite(r.x2_gap));
    CHECK(std::isfinite(r.p2_gap));
}

TEST_CASE("closed form heat") {
    const auto room = spec_at(9.52);
    const auto cfg = InterferometerConfig::from_c2_sq(0.5, 0.0);
    CHECK(heat_closed_form(cfg, room, 0.0) == 0.0);
    CHECK(heat_closed_form(cfg, room, inf) == doctest::Approx(1e12 * 0.5 / 4.0).epsilon(1e-15));
    const auto quarter = InterferometerConfig::from_c2_sq(0.5, std::numbers::pi / 2.0);
    double last = 0.0;
    for (double t : log_grid(1e-10, 1e-5, 100)) {
        CHECK(std::abs(heat_closed_form(quarter, room, t)) < 1e-15 * 1e12);
        const double q = heat_closed_form(cfg, room, t);
        CHECK(q >= last);
        CHECK(q <= 1e12 * cfg.c2_sq() / 4.0);
        last = q;
    }
}

TEST_CASE("integrated heat") {
    const auto room = spec_at(9.52);
    const std::vector<double> grid = log_grid(1e-10, 1e-6, 40);

    const auto q0 = heat_from_quadratures(InterferometerConfig::from_c2_sq(0.0, 0.0), room, grid);
    for (double q : q0) {
        CHECK(q == 0.0);
    }

    const auto cfg = InterferometerConfig::from_c2_sq(0.5, 0.0);
    const auto coarse = heat_from_quadratures(cfg, room, grid);
    std::vector<double> fine_grid;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (k > 0) {
            fine_grid.push_back(0.5 * (grid[k - 1] + grid[k]));
        }
        fine_grid.push_back(grid[k]);
    }
    const auto fine = heat_from_quadratures(cfg, room, fine_grid);
    CHECK(std::abs(fine.back() - coarse.back()) <= 1e-8 * std::abs(coarse.back()));

    const std::vector<double> with_zero{0.0, 1e-9};
    CHECK(heat_from_quadratures(cfg, room, with_zero).front() == 0.0);
    const std::vector<double> backwards{1e-9, 1e-10};
    CHECK_THROWS_AS((void)heat_from_quadratures(cfg, room, backwards), error);

    const auto report = consistency_report(cfg, room, 1e-7);
    CHECK(report.heat_gap == report.heat_closed - report.heat_integrated);
}

TEST_CASE("asymptotic entropy") {
    CHECK(entropy_infinity(0.5, 0.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(entropy_infinity(0.5, 1e12) == doctest::Approx(1.5 * std::numbers::ln2).epsilon(1e-11));
    for (int i = 1; i <= 9; ++i) {
        const double c2 = i / 10.0;
        const auto cfg = InterferometerConfig::from_c2_sq(c2, 0.0);
        for (double nbar : {0.5, 1.0, 5.0, 40.0, 1e4}) {
            const CMatrix m = interferometer::closed_form_matrix(cfg, nbar, 0.0);
            CHECK(std::abs(hilbert::von_neumann_entropy(DensityMatrix(m)) - entropy_infinity(c2, nbar)) < 1e-12);
        }
    }
    CHECK_THROWS_AS((void)entropy_infinity(0.0, 1.0), error);
    CHECK_THROWS_AS((void)entropy_infinity(1.0, 1.0), error);
}

TEST_CASE("Clausius functional") {
    const auto cfg = InterferometerConfig::from_c2_sq(0.5, 0.0);
    const auto room = spec_at(9.52);
    const ThermoRecord r = clausius_function(cfg, room, inf);
    CHECK(r.S == doctest::Approx(1.040).epsilon(1e-3));
    CHECK(r.Q / room.thermal_frequency() == doctest::Approx(room.hbar_omega_over_kt() / 8.0).epsilon(1e-14));
    CHECK(r.F > 0.0);
    CHECK_FALSE(r.violation);
    CHECK(r.F == r.S - r.Q / room.thermal_frequency());

    const ThermoRecord cold = clausius_function(cfg, spec_at(23.0), inf);
    CHECK(cold.F == doctest::Approx(std::numbers::ln2 - 7.638e11 / 8.0).epsilon(1e-3));
    CHECK(cold.violation);

    const ThermoRecord start = clausius_function(cfg, room, 0.0);
    CHECK(std::abs(start.S) < 1e-12);
    CHECK(start.Q == 0.0);
    CHECK(std::abs(start.F) < 1e-12);
    CHECK(start.U_joule() == doctest::Approx(start.U * bath::PhysicalConstants::hbar));

    CHECK_THROWS_AS((void)clausius_function(cfg, room.with_temperature(0.0), 1e-9), error);
}

TEST_CASE("violation crossover") {
    const auto balanced = InterferometerConfig::from_c2_sq(0.5, 0.0);
    const double x = violation_crossover(balanced);
    CHECK(x == doctest::Approx(8.0 * std::numbers::ln2).epsilon(0.05));
    CHECK(std::abs(clausius_infinity(balanced, x)) < 1e-5);
    for (double y : {1.1 * x, 2.0 * x, 50.0 * x}) {
        CHECK(clausius_infinity(balanced, y) < 0.0);
    }

    try {
        (void)violation_crossover(InterferometerConfig::from_c2_sq(0.5, std::numbers::pi / 2.0));
        FAIL("expected no-crossover");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_crossover);
    }
    CHECK_THROWS_AS((void)violation_crossover(InterferometerConfig::from_c2_sq(1.0, 0.0)), error);

    double last = 0.0;
    for (double c2 : {0.9, 0.7, 0.5, 0.3, 0.1}) {
        const double xs = violation_crossover(InterferometerConfig::from_c2_sq(c2, 0.0));
        CHECK(xs > last);
        last = xs;
    }

    // Below the crossover F stays nonnegative at every time.
    const double temp = 1e12 * bath::PhysicalConstants::hbar / (bath::PhysicalConstants::k_boltzmann * 0.8 * x);
    const auto warm = bath::BathSpec::from_ratio(1.5e-3, 10.0, 1e12, temp);
    for (double t : log_grid(1e-10, 1e-5, 100)) {
        CHECK(clausius_function(balanced, warm, t).F >= 0.0);
    }
    const auto colder = warm.with_temperature(temp / 1.5);
    CHECK(clausius_function(balanced, colder, inf).F < 0.0);
}

TEST_CASE("coupling strength drops out at fixed decay") {
    const auto cfg = InterferometerConfig::from_c2_sq(0.4, 0.3);
    const auto a = spec_at(9.52, 1.5e-3);
    const auto b = spec_at(9.52, 0.75e-3);
    CHECK(clausius_function(cfg, a, inf).F == clausius_function(cfg, b, inf).F);
    CHECK(entropy_infinity(cfg, a) == entropy_infinity(cfg, b));
    for (double t : {1e-10, 1e-8, 3e-7}) {
        const ThermoRecord ra = clausius_function(cfg, a, t);
        const ThermoRecord rb = clausius_function(cfg, b, 4.0 * t);
        CHECK(ra.S == rb.S);
        CHECK(ra.Q == rb.Q);
        CHECK(ra.F == rb.F);
    }
}
