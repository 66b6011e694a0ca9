// coherence.hpp: dephasing, distillable (relative-entropy) coherence, the
// coherence-measure postulate checks, passive states and ergotropy.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/hilbert.hpp"
#include "clausius/interferometer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace clausius::coherence {

/// Keeps the diagonal in the computational (energy) basis.
DensityMatrix dephase(const DensityMatrix& rho);

/// S(dephase(rho)) - S(rho), nats.
double distillable_coherence(const DensityMatrix& rho);

using CoherenceMeasure = std::function<double(const DensityMatrix&)>;

struct PostulateResult {
    std::string name;
    int samples = 0;
    double worst_margin = 0.0; // >= -tolerance means pass
    bool passed = true;
    std::string counterexample;
};

struct PostulateReport {
    std::vector<PostulateResult> results;

    bool passed() const;
    /// Throws postulate-violation naming the first failed postulate.
    void require() const;
};

inline constexpr double postulate_tolerance = 1e-10;

/// Nonnegativity, monotonicity under dephasing, convexity, uniqueness on pure
/// states and additivity on 3 (x) 3 products, each on `samples` seeded random
/// states of dimension `dim`.
PostulateReport coherence_postulate_suite(const CoherenceMeasure& measure, int samples, std::uint64_t seed,
                                          int dim = 3);

struct PassiveDecomposition {
    DensityMatrix passive;
    std::vector<double> populations; // descending
    std::vector<double> energies;    // ascending
    double ergotropy = 0.0;
};

/// Hamiltonian must be diagonal with nondecreasing entries. Ties among
/// eigenvalues of rho keep their original order.
PassiveDecomposition passive_state(const DensityMatrix& rho, const OperatorMatrix& hamiltonian);

/// tr[rho H] - tr[pi H].
double ergotropy(const DensityMatrix& rho, const OperatorMatrix& hamiltonian);

/// Omega diag(1/2, 3/2, 5/2) on the relabeled levels.
OperatorMatrix relabeled_hamiltonian(double omega);

/// |C2|^2 Omega / (2 (2 nbar + 1)) in hbar = 1 units.
double ergotropy_closed_form(const interferometer::InterferometerConfig& cfg, const bath::BathSpec& spec);
double ergotropy_closed_form(double c2_sq, double nbar, double omega);

/// True when |C1|^2 >= |C2|^2 (nbar + 1)/(2 nbar + 1), the ordering in which the
/// closed form equals the sort-based ergotropy of rho_s(infinity).
bool population_ordering_regime(double c2_sq, double nbar);

} // namespace clausius::coherence
