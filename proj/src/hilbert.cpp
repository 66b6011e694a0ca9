#include "clausius/hilbert.hpp"

#include "clausius/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

namespace clausius::hilbert {

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw error(errc::invalid_dimension, "density matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw error(errc::invalid_state, "density matrix has non-finite entries");
    }
    const double asym = max_abs(m - m.adjoint());
    if (asym > hermiticity_tolerance) {
        throw error(errc::invalid_state, "not Hermitian (max |A - A^dagger| = " + std::to_string(asym) + ")");
    }
    m_ = (m + m.adjoint()) * 0.5;
    const double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > trace_tolerance) {
        throw error(errc::invalid_state, "trace " + std::to_string(tr) + " differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -positivity_tolerance) {
        throw error(errc::invalid_state, "negative eigenvalue " + std::to_string(lo));
    }
}

double DensityMatrix::purity() const {
    return (m_ * m_).trace().real();
}

std::pair<OperatorMatrix, OperatorMatrix> ladder_operators(int dim) {
    if (dim < 2) {
        throw error(errc::invalid_dimension, "ladder operators need dim >= 2, got " + std::to_string(dim));
    }
    OperatorMatrix a = OperatorMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    OperatorMatrix adag = a.adjoint();
    return {std::move(a), std::move(adag)};
}

QuadratureOperators quadrature_operators(int dim, double omega) {
    if (dim < 2) {
        throw error(errc::invalid_dimension, "quadrature operators need dim >= 2");
    }
    if (!(omega > 0.0)) {
        throw error(errc::invalid_parameter, "omega must be positive");
    }
    QuadratureOperators q{OperatorMatrix::Zero(dim, dim), OperatorMatrix::Zero(dim, dim),
                          OperatorMatrix::Zero(dim, dim)};
    for (int n = 0; n < dim; ++n) {
        const double level = 2.0 * n + 1.0;
        q.x2(n, n) = level / (2.0 * omega);
        q.p2(n, n) = omega * level / 2.0;
        if (n + 2 < dim) {
            const double c = std::sqrt((n + 1.0) * (n + 2.0));
            q.x2(n, n + 2) = q.x2(n + 2, n) = c / (2.0 * omega);
            q.p2(n, n + 2) = q.p2(n + 2, n) = -omega * c / 2.0;
        }
    }
    q.hamiltonian = 0.5 * q.p2 + 0.5 * omega * omega * q.x2;
    return q;
}

Spectrum eig_hermitian(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw error(errc::dimension_mismatch, "eig_hermitian needs a square matrix");
    }
    const double asym = max_abs(a - a.adjoint());
    if (asym > eig_hermiticity_tolerance) {
        throw error(errc::hermiticity_violation, "max |A - A^dagger| = " + std::to_string(asym));
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es((a + a.adjoint()) * 0.5);
    if (es.info() != Eigen::Success) {
        throw error(errc::numerical_failure, "Hermitian eigen-decomposition did not converge");
    }
    return {es.eigenvalues(), es.eigenvectors()};
}

double entropy_of_populations(std::span<const double> p) {
    double s = 0.0;
    for (double v : p) {
        if (v > entropy_clip) {
            s -= v * std::log(v);
        }
    }
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    // Construction already rejected eigenvalues below -positivity_tolerance.
    const Spectrum sp = eig_hermitian(rho.matrix());
    return entropy_of_populations(std::span<const double>(sp.values.data(), sp.values.size()));
}

double momentum_wavefunction(int n, double omega, double p) {
    if (n < 0 || !(omega > 0.0)) {
        throw error(errc::invalid_parameter, "momentum_wavefunction needs n >= 0 and omega > 0");
    }
    // Normalized Hermite functions phi_n(u), u = P / sqrt(omega), by the
    // three-term recurrence; psi_n(P) = omega^(-1/4) phi_n(u).
    const double u = p / std::sqrt(omega);
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1.0)) * u * cur - std::sqrt(k / (k + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return cur * std::pow(omega, -0.25);
}

DensityMatrix pure_state(const CVector& psi) {
    const double nrm = psi.norm();
    if (!(nrm > 0.0)) {
        throw error(errc::invalid_state, "zero state vector");
    }
    const CVector v = psi / nrm;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = complex(g(rng), g(rng));
        }
    }
    CMatrix r = m * m.adjoint();
    r /= r.trace().real();
    return DensityMatrix((r + r.adjoint()) * 0.5);
}

CVector random_pure_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = complex(g(rng), g(rng));
    }
    return v / v.norm();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace clausius::hilbert
