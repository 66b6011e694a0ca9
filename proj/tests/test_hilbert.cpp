#include "clausius/errors.hpp"
#include "clausius/hilbert.hpp"
#include "clausius/oracles.hpp"
#include "clausius/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace clausius;
using namespace clausius::hilbert;

namespace {

CMatrix diag(std::initializer_list<double> v) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

bool throws_code(errc code, auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("ladder operators") {
    auto [a2, ad2] = ladder_operators(2);
    CMatrix want(2, 2);
    want << 0, 1, 0, 0;
    CHECK(max_abs(a2 - want) == 0.0);
    CHECK(max_abs(ad2 - want.adjoint()) == 0.0);

    auto [a3, ad3] = ladder_operators(3);
    CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    for (int dim = 2; dim <= 8; ++dim) {
        auto [a, ad] = ladder_operators(dim);
        const CMatrix n = ad * a;
        for (int k = 0; k < dim; ++k) {
            CHECK(std::abs(n(k, k) - complex(k, 0.0)) < 1e-14);
        }
        CHECK(max_abs(n - CMatrix(n.diagonal().asDiagonal())) < 1e-15);
    }
    CHECK(throws_code(errc::invalid_dimension, [] { (void)ladder_operators(1); }));
}

TEST_CASE("quadrature operators") {
    const auto q2 = quadrature_operators(2, 1.0);
    CHECK(max_abs(q2.hamiltonian - diag({0.5, 1.5})) < 1e-15);

    const auto q3 = quadrature_operators(3, 1.0);
    CHECK(q3.x2(0, 2).real() == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    for (double omega : {0.3, 1.0, 1e12}) {
        const auto q = quadrature_operators(6, omega);
        CHECK(max_abs(0.5 * q.p2 + 0.5 * omega * omega * q.x2 - q.hamiltonian) <= 1e-15 * omega * 10);
        for (int n = 0; n < 6; ++n) {
            CHECK(q.x2(n, n).real() == doctest::Approx((2.0 * n + 1) / (2.0 * omega)).epsilon(1e-15));
            CHECK(q.p2(n, n).real() == doctest::Approx(omega * (2.0 * n + 1) / 2.0).epsilon(1e-15));
            CHECK(q.hamiltonian(n, n).real() == doctest::Approx(omega * (n + 0.5)).epsilon(1e-14));
        }
    }
    CHECK(throws_code(errc::invalid_parameter, [] { (void)quadrature_operators(3, 0.0); }));
    CHECK(throws_code(errc::invalid_parameter, [] { (void)quadrature_operators(3, -1.0); }));
}

TEST_CASE("eig_hermitian") {
    const Spectrum d = eig_hermitian(diag({3, 1, 2}));
    CHECK(d.values(0) == doctest::Approx(1.0));
    CHECK(d.values(1) == doctest::Approx(2.0));
    CHECK(d.values(2) == doctest::Approx(3.0));

    CMatrix m(2, 2);
    m << 0.5, complex(0, -0.5), complex(0, 0.5), 0.5;
    const Spectrum s = eig_hermitian(m);
    CHECK(std::abs(s.values(0)) < 1e-15);
    CHECK(s.values(1) == doctest::Approx(1.0).epsilon(1e-15));

    const Spectrum id = eig_hermitian(CMatrix::Identity(4, 4));
    for (int k = 0; k < 4; ++k) {
        CHECK(id.values(k) == doctest::Approx(1.0));
    }

    CMatrix bad(2, 2);
    bad << 1, 1, 0, 1;
    CHECK(throws_code(errc::hermiticity_violation, [&] { (void)eig_hermitian(bad); }));
}

TEST_CASE("eig_hermitian properties on random matrices") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 2 + trial % 3;
        CMatrix a(dim, dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                a(i, j) = complex(g(rng), g(rng));
            }
        }
        const CMatrix h = 0.5 * (a + a.adjoint());
        const Spectrum s = eig_hermitian(h);
        for (int k = 1; k < dim; ++k) {
            CHECK(s.values(k - 1) <= s.values(k));
        }
        CHECK(std::abs(s.values.sum() - h.trace().real()) < 1e-10);
        CHECK(std::abs(s.values.prod() - h.determinant().real()) < 1e-8);
        CHECK(max_abs(s.vectors.adjoint() * s.vectors - CMatrix::Identity(dim, dim)) < 1e-10);
        CHECK(max_abs(s.vectors * s.values.cast<complex>().asDiagonal() * s.vectors.adjoint() - h) < 1e-10);
        const auto jac = oracles::jacobi_eigenvalues(h);
        for (int k = 0; k < dim; ++k) {
            CHECK(std::abs(jac[static_cast<std::size_t>(k)] - s.values(k)) < 1e-10);
        }
    }
}

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(DensityMatrix(diag({0.25, 0.75})));
    CHECK(throws_code(errc::invalid_state, [] { (void)DensityMatrix(diag({0.5, 0.6})); }));
    CHECK(throws_code(errc::invalid_state, [] { (void)DensityMatrix(diag({1.5, -0.5})); }));
    CMatrix nh(2, 2);
    nh << 0.5, 0.1, 0.0, 0.5;
    CHECK(throws_code(errc::invalid_state, [&] { (void)DensityMatrix{nh}; }));
    CHECK(throws_code(errc::invalid_dimension, [] { (void)DensityMatrix(CMatrix(2, 3)); }));
}

TEST_CASE("von Neumann entropy") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        CHECK(std::abs(von_neumann_entropy(pure_state(random_pure_vector(4, rng)))) < 1e-12);
    }
    CHECK(von_neumann_entropy(DensityMatrix(diag({0.5, 0.5}))) == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK(von_neumann_entropy(DensityMatrix(diag({0.5, 0.25, 0.25}))) ==
          doctest::Approx(1.5 * std::numbers::ln2).epsilon(1e-14));
    CHECK(von_neumann_entropy(DensityMatrix(diag({0.5, 0.25, 0.25}))) == doctest::Approx(1.0397).epsilon(1e-4));

    for (int k = 0; k < 200; ++k) {
        const int dim = 2 + k % 4;
        const DensityMatrix rho = random_density_matrix(dim, rng);
        const double s = von_neumann_entropy(rho);
        CHECK(s >= 0.0);
        CHECK(s <= std::log(dim) + 1e-12);
        // Dephasing never lowers the entropy.
        CMatrix d = CMatrix::Zero(dim, dim);
        d.diagonal() = rho.matrix().diagonal();
        CHECK(von_neumann_entropy(DensityMatrix(d)) >= s - 1e-12);
        CHECK(std::abs(s - oracles::jacobi_entropy(rho.matrix())) < 1e-10);
    }
}

TEST_CASE("momentum wavefunctions") {
    CHECK(momentum_wavefunction(0, 1.0, 0.0) == doctest::Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(momentum_wavefunction(0, 1.0, 0.0) == doctest::Approx(0.7511).epsilon(1e-4));
    for (double omega : {0.5, 1.0, 1e12}) {
        CHECK(momentum_wavefunction(1, omega, 0.0) == 0.0);
    }
    for (double p : {-2.0, -0.3, 0.0, 1.1, 3.0}) {
        const double psi = momentum_wavefunction(0, 1.0, p);
        CHECK(psi * psi == doctest::Approx(std::exp(-p * p) / std::sqrt(std::numbers::pi)).epsilon(1e-14));
    }

    for (double omega : {1.0, 4e6}) {
        const double w = std::sqrt(omega);
        for (int m = 0; m <= 5; ++m) {
            for (int n = m; n <= 5; ++n) {
                const auto r = quadrature::adaptive(
                    [&](double p) { return momentum_wavefunction(m, omega, p) * momentum_wavefunction(n, omega, p); },
                    -14.0 * w, 14.0 * w, 1e-12);
                CHECK(std::abs(r.value - (m == n ? 1.0 : 0.0)) < 1e-8);
            }
        }
    }
}

TEST_CASE("kron") {
    const CMatrix a = diag({1, 2});
    const CMatrix b = diag({3, 5});
    CHECK(max_abs(kron(a, b) - diag({3, 5, 6, 10})) == 0.0);
}
