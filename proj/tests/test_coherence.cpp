#include "clausius/coherence.hpp"
#include "clausius/errors.hpp"
#include "clausius/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace clausius;
using namespace clausius::coherence;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bath::BathSpec spec_at(double log10_ratio) {
    return bath::BathSpec::from_ratio(1.5e-3, 10.0, 1e12, bath::temperature_from_log_ratio(1e12, log10_ratio));
}

} // namespace

TEST_CASE("dephasing and distillable coherence") {
    const CMatrix plus = CMatrix::Constant(2, 2, 0.5);
    const DensityMatrix rho(plus);
    CHECK(hilbert::max_abs(dephase(rho).matrix() - CMatrix::Identity(2, 2) * 0.5) == 0.0);
    CHECK(distillable_coherence(rho) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(distillable_coherence(dephase(rho)) == 0.0);

    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        const DensityMatrix r = hilbert::random_density_matrix(3, rng);
        CHECK(distillable_coherence(r) >= -1e-12);
        CHECK(distillable_coherence(r) <= std::log(3.0) + 1e-12);
    }
}

TEST_CASE("postulate suite") {
    const PostulateReport good = coherence_postulate_suite(distillable_coherence, 200, 20231017);
    REQUIRE(good.results.size() == 5);
    for (const auto& r : good.results) {
        CHECK_MESSAGE(r.passed, r.name);
        CHECK(r.samples == 200);
        CHECK(r.worst_margin >= -postulate_tolerance);
    }
    CHECK(good.passed());
    CHECK_NOTHROW(good.require());

    // Same seed, same margins.
    const PostulateReport again = coherence_postulate_suite(distillable_coherence, 200, 20231017);
    for (std::size_t k = 0; k < good.results.size(); ++k) {
        CHECK(good.results[k].worst_margin == again.results[k].worst_margin);
    }

    // A measure that is not a coherence measure is caught.
    const CoherenceMeasure purity = [](const DensityMatrix& r) { return r.purity(); };
    const PostulateReport bad = coherence_postulate_suite(purity, 50, 1);
    CHECK_FALSE(bad.passed());
    for (const auto& r : bad.results) {
        CHECK(r.passed == r.counterexample.empty());
    }
    try {
        bad.require();
        FAIL("expected postulate-violation");
    } catch (const error& e) {
        CHECK(e.code() == errc::postulate_violation);
    }
}

TEST_CASE("passive states and ergotropy") {
    const OperatorMatrix h = relabeled_hamiltonian(1.0);
    CMatrix inverted = CMatrix::Zero(3, 3);
    inverted(2, 2) = 1.0;
    const PassiveDecomposition p = passive_state(DensityMatrix(inverted), h);
    CHECK(p.ergotropy == doctest::Approx(2.0));
    CHECK(p.passive(0, 0).real() == doctest::Approx(1.0));
    CHECK(ergotropy(DensityMatrix(CMatrix::Identity(3, 3) / 3.0), h) == doctest::Approx(0.0));

    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        const DensityMatrix rho = hilbert::random_density_matrix(3, rng);
        const PassiveDecomposition d = passive_state(rho, h);
        CHECK(d.ergotropy >= 0.0);
        for (std::size_t i = 1; i < d.populations.size(); ++i) {
            CHECK(d.populations[i - 1] >= d.populations[i]);
        }
        CHECK(std::abs(d.ergotropy - oracles::brute_force_ergotropy(rho.matrix(), h)) < 1e-12);
        CHECK(ergotropy(d.passive, h) < 1e-14);
    }

    CMatrix off = relabeled_hamiltonian(1.0);
    off(0, 1) = off(1, 0) = 0.3;
    CHECK_THROWS_AS((void)passive_state(DensityMatrix(CMatrix::Identity(3, 3) / 3.0), off), error);
    CMatrix unsorted = relabeled_hamiltonian(1.0);
    std::swap(unsorted(0, 0), unsorted(2, 2));
    CHECK_THROWS_AS((void)passive_state(DensityMatrix(CMatrix::Identity(3, 3) / 3.0), unsorted), error);
    CHECK_THROWS_AS((void)passive_state(DensityMatrix(CMatrix::Identity(2, 2) / 2.0), h), error);
}

TEST_CASE("ergotropy of the asymptotic interferometer state") {
    const OperatorMatrix h = relabeled_hamiltonian(1.0);
    for (int i = 1; i <= 9; ++i) {
        const double c2 = i / 10.0;
        const auto cfg = interferometer::InterferometerConfig::from_c2_sq(c2, 0.0);
        for (double nbar : {0.0, 0.5, 1.0, 5.0, 40.0}) {
            const DensityMatrix rho(interferometer::closed_form_matrix(cfg, nbar, 0.0));
            const double sorted = ergotropy(rho, h);
            const double closed = ergotropy_closed_form(c2, nbar, 1.0);
            if (population_ordering_regime(c2, nbar)) {
                CHECK(std::abs(sorted - closed) <= 1e-12 * closed);
            } else {
                // Outside the ordering regime the sort picks a different pairing.
                CHECK(sorted >= closed - 1e-12);
            }
        }
    }
    const auto balanced = interferometer::InterferometerConfig::from_c2_sq(0.5, 0.0);
    const auto room = spec_at(9.52);
    const double nbar = bath::asymptotic_rates(room).nbar;
    CHECK(ergotropy_closed_form(balanced, room) == doctest::Approx(0.5e12 / (2.0 * (2.0 * nbar + 1.0))));
    CHECK(population_ordering_regime(0.5, 0.0));
    CHECK_FALSE(population_ordering_regime(0.9, 0.0));
}

TEST_CASE("coherence decays and orders with temperature") {
    const auto cfg = interferometer::InterferometerConfig::from_c2_sq(0.6, 0.0);
    const double temps[] = {9.52, 10.0, 11.0, 12.0, 23.0};
    std::vector<std::vector<double>> cd;
    for (double L : temps) {
        const auto spec = spec_at(L);
        std::vector<double> row;
        for (int k = 0; k < 200; ++k) {
            const double t = 1e-10 * std::pow(1e5, k / 199.0);
            row.push_back(distillable_coherence(interferometer::closed_form_audit_state(cfg, spec, t).state));
        }
        for (std::size_t k = 1; k < row.size(); ++k) {
            CHECK(row[k] <= row[k - 1] + 1e-12);
        }
        cd.push_back(row);
    }
    for (std::size_t a = 1; a < cd.size(); ++a) {
        for (std::size_t k = 0; k < cd[a].size(); ++k) {
            CHECK(cd[a][k] >= cd[a - 1][k] - 1e-12);
        }
    }
    CHECK(distillable_coherence(interferometer::closed_form_audit_state(cfg, spec_at(9.52), inf).state) > 0.0);
}
