// interferometer.hpp: three-branch interferometer with baths on branches b and
// c. Gates, the pre-bath state, the beamsplitter BS3, the closed-form reduced
// density matrix rho_s(t) and the momentum-space interference pattern.
//
// Basis after relabeling: |0> = |1,0,0>_abc, |1> = |0,2,0>_abc, |2> = |0,0,3>_abc.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/hilbert.hpp"

#include <functional>
#include <utility>

namespace clausius::interferometer {

inline constexpr double norm_tolerance = 1e-12;

class InterferometerConfig {
public:
    /// delta is the dimensionless path difference d * sqrt(Omega).
    InterferometerConfig(complex c1, complex c2, double phi, double delta);

    /// Real amplitudes C1 = sqrt(1 - c2_sq), C2 = sqrt(c2_sq).
    static InterferometerConfig from_c2_sq(double c2_sq, double phi, double delta = 6.0);

    complex c1() const noexcept { return c1_; }
    complex c2() const noexcept { return c2_; }
    double phi() const noexcept { return phi_; }
    double delta() const noexcept { return delta_; }
    double c1_sq() const noexcept { return std::norm(c1_); }
    double c2_sq() const noexcept { return std::norm(c2_); }
    /// C1 C2^* = Z e^{i theta}
    double z() const noexcept { return std::abs(c1_) * std::abs(c2_); }
    double theta() const noexcept { return std::arg(c1_ * std::conj(c2_)); }

private:
    complex c1_, c2_;
    double phi_;
    double delta_;
};

/// eta = exp(-Gamma t (2 nbar + 1)); t = +inf gives exactly 0.
struct DecoherenceFactor {
    double eta = 1.0;

    static DecoherenceFactor at(double Gamma, double nbar, double t);
    static DecoherenceFactor at(const bath::BathSpec& spec, double t);
};

/// The two 4x4 permutation gates acting on branches b and c.
std::pair<OperatorMatrix, OperatorMatrix> gates_u1_u2();

/// (C1, C2 e^{i phi}/sqrt2, i C2/sqrt2) in the relabeled basis.
CVector initial_state(const InterferometerConfig& cfg);

/// |psi><psi| of initial_state.
DensityMatrix initial_density(const InterferometerConfig& cfg);

/// V = 1 (+) [[1, i], [i, 1]]/sqrt2 on branches b, c.
OperatorMatrix bs3_matrix();
DensityMatrix apply_bs3(const DensityMatrix& rho);

/// Entry-by-entry closed form for given nbar and eta, with no positivity check.
CMatrix closed_form_matrix(const InterferometerConfig& cfg, double nbar, double eta);

/// Builder signature used by endpoint checks so a mutated transcription can be
/// fed through the same check.
using ClosedFormBuilder = std::function<CMatrix(const InterferometerConfig&, double nbar, double eta)>;

/// Closed form at time t (t = +inf allowed). Throws model-inconsistency when the
/// matrix has an eigenvalue below -1e-10, which happens for nbar < 1/2 at
/// intermediate eta.
DensityMatrix closed_form_state(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

/// Closed form made usable for entropy-based audits. When the matrix is not
/// positive semidefinite, negative eigenvalues are set to zero and the result
/// rescaled to unit trace; `min_eigenvalue` keeps the defect so callers can
/// report it.
struct AuditedState {
    DensityMatrix state;
    double min_eigenvalue = 0.0;
    bool projected = false;
};
AuditedState closed_form_audit_state(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t);

/// Pattern relative to its Gaussian envelope:
/// Pr / envelope = 1 + half_cos cos(Pd/2) + half_sin sin(Pd/2) + full_cos cos(Pd) + full_sin sin(Pd).
struct FringeCoefficients {
    double half_cos = 0.0;
    double half_sin = 0.0;
    double full_cos = 0.0;
    double full_sin = 0.0;
};
FringeCoefficients fringe_coefficients(const InterferometerConfig& cfg, double nbar, double eta);

/// sqrt(1/(Omega pi)) exp(-P^2/Omega)
double pattern_envelope(double omega, double p);

/// Probability density of momentum P after BS3, with d = delta / sqrt(Omega).
double interference_pattern(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t, double p);

/// Largest |Pr(t, P) - Pr(inf, P)| / envelope(P) over n points of
/// P in [-6 sqrt(Omega), 6 sqrt(Omega)]: the part of the fringes that decoherence
/// removes. The sin(Pd) term left at t = inf is excluded.
double decaying_fringe_amplitude(const InterferometerConfig& cfg, const bath::BathSpec& spec, double t,
                                 int n = 2001);

/// Clip negative eigenvalues of a Hermitian matrix and rescale to unit trace.
CMatrix clip_to_state(const CMatrix& m);

} // namespace clausius::interferometer
