// hilbert.hpp: truncated Fock-space operators, Hermitian spectra, von Neumann
// entropy and harmonic-oscillator momentum wavefunctions.
//
// Internal units: hbar = 1, frequencies in s^-1, so energies come out in s^-1.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <span>
#include <utility>

namespace clausius {

using complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Operators on the truncated Fock space are plain complex matrices.
using OperatorMatrix = CMatrix;

namespace hilbert {

inline constexpr double hermiticity_tolerance = 1e-12;
inline constexpr double trace_tolerance = 1e-10;
inline constexpr double positivity_tolerance = 1e-10;
inline constexpr double eig_hermiticity_tolerance = 1e-10;
/// Eigenvalues below this are treated as exact zeros in p ln p.
inline constexpr double entropy_clip = 1e-12;

/// Unit-trace, Hermitian, positive semidefinite matrix. Construction validates
/// all three and stores the exactly Hermitian part (A + A^dagger) / 2.
class DensityMatrix {
public:
    explicit DensityMatrix(const CMatrix& m);

    Eigen::Index dim() const noexcept { return m_.rows(); }
    const CMatrix& matrix() const noexcept { return m_; }
    complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    double purity() const;

private:
    CMatrix m_;
};

struct Spectrum {
    RVector values;  // ascending
    CMatrix vectors; // orthonormal columns
};

std::pair<OperatorMatrix, OperatorMatrix> ladder_operators(int dim);

struct QuadratureOperators {
    OperatorMatrix x2;
    OperatorMatrix p2;
    OperatorMatrix hamiltonian;
};

/// X^2, P^2 and H_s = P^2/2 + Omega^2 X^2/2 with X = (a + a^dagger)/sqrt(2 Omega),
/// P = i (a^dagger - a) sqrt(Omega/2). Elements are filled from the infinite-space
/// formulas, so the last diagonal entries carry no truncation artefact.
QuadratureOperators quadrature_operators(int dim, double omega);

Spectrum eig_hermitian(const CMatrix& a);

/// -sum p ln p over already-computed eigenvalues (nats).
double entropy_of_populations(std::span<const double> p);

double von_neumann_entropy(const DensityMatrix& rho);

/// Normalized momentum-space eigenfunction psi_n(P) of the oscillator with
/// frequency omega (unit mass, hbar = 1).
double momentum_wavefunction(int n, double omega, double p);

DensityMatrix pure_state(const CVector& psi);

/// Haar-ish random states for property tests: Ginibre G G^dagger / tr, and a
/// normalized complex Gaussian vector.
DensityMatrix random_density_matrix(int dim, std::mt19937_64& rng);
CVector random_pure_vector(int dim, std::mt19937_64& rng);

CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);

} // namespace hilbert

using hilbert::DensityMatrix;

} // namespace clausius
