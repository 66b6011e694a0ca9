#include "clausius/coherence.hpp"

#include "clausius/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace clausius::coherence {

DensityMatrix dephase(const DensityMatrix& rho) {
    const CMatrix d = rho.matrix().diagonal().real().cast<complex>().asDiagonal();
    return DensityMatrix(d);
}

double distillable_coherence(const DensityMatrix& rho) {
    std::vector<double> diag(static_cast<std::size_t>(rho.dim()));
    for (Eigen::Index i = 0; i < rho.dim(); ++i) {
        diag[static_cast<std::size_t>(i)] = rho(i, i).real();
    }
    return hilbert::entropy_of_populations(diag) - hilbert::von_neumann_entropy(rho);
}

bool PostulateReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const PostulateResult& r) { return r.passed; });
}

void PostulateReport::require() const {
    for (const auto& r : results) {
        if (!r.passed) {
            throw error(errc::postulate_violation, r.name + ": " + r.counterexample);
        }
    }
}

namespace {

std::string describe(const CMatrix& m) {
    std::ostringstream os;
    os.precision(17);
    os << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << (j ? ", " : "") << m(i, j).real() << (m(i, j).imag() < 0 ? "" : "+") << m(i, j).imag() << "i";
        }
    }
    os << "]";
    return os.str();
}

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); r_.worst_margin = std::numeric_limits<double>::infinity(); }

    void add(double margin, const CMatrix& witness) {
        ++r_.samples;
        if (margin < r_.worst_margin) {
            r_.worst_margin = margin;
            if (margin < -postulate_tolerance && r_.passed) {
                r_.passed = false;
                std::ostringstream os;
                os.precision(17);
                os << "margin " << margin << " at " << describe(witness);
                r_.counterexample = os.str();
            }
        }
    }

    PostulateResult result() const { return r_; }

private:
    PostulateResult r_;
};

} // namespace

PostulateReport coherence_postulate_suite(const CoherenceMeasure& measure, int samples, std::uint64_t seed, int dim) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Tally nonneg("nonnegativity");
    Tally mono("dephasing monotonicity");
    Tally convex("convexity");
    Tally unique("uniqueness on pure states");
    Tally additive("additivity under tensor products");

    for (int i = 0; i < samples; ++i) {
        const DensityMatrix rho = hilbert::random_density_matrix(dim, rng);
        const DensityMatrix sigma = hilbert::random_density_matrix(dim, rng);
        const double lambda = unit(rng);
        const double c_rho = measure(rho);
        const double c_sigma = measure(sigma);

        nonneg.add(c_rho, rho.matrix());

        // C(dephase(rho)) <= C(rho)
        const double c_dephased = measure(dephase(rho));
        mono.add(c_rho - c_dephased, rho.matrix());

        const DensityMatrix mix(lambda * rho.matrix() + (1.0 - lambda) * sigma.matrix());
        convex.add(lambda * c_rho + (1.0 - lambda) * c_sigma - measure(mix), mix.matrix());

        const CVector psi = hilbert::random_pure_vector(dim, rng);
        const DensityMatrix pure = hilbert::pure_state(psi);
        std::vector<double> probs(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k) {
            probs[static_cast<std::size_t>(k)] = std::norm(psi(k));
        }
        unique.add(-std::abs(measure(pure) - hilbert::entropy_of_populations(probs)), pure.matrix());

        const DensityMatrix a = hilbert::random_density_matrix(3, rng);
        const DensityMatrix b = hilbert::random_density_matrix(3, rng);
        const DensityMatrix ab(hilbert::kron(a.matrix(), b.matrix()));
        additive.add(-std::abs(measure(ab) - measure(a) - measure(b)), ab.matrix());
    }

    PostulateReport report;
    for (const Tally* t : {&nonneg, &mono, &convex, &unique, &additive}) {
        report.results.push_back(t->result());
    }
    return report;
}

PassiveDecomposition passive_state(const DensityMatrix& rho, const OperatorMatrix& hamiltonian) {
    const Eigen::Index n = rho.dim();
    if (hamiltonian.rows() != n || hamiltonian.cols() != n) {
        throw error(errc::dimension_mismatch, "state and Hamiltonian dimensions differ");
    }
    const CMatrix off = hamiltonian - CMatrix(hamiltonian.diagonal().asDiagonal());
    if (hilbert::max_abs(off) > 1e-12 * std::max(1.0, hilbert::max_abs(hamiltonian)) ||
        hamiltonian.diagonal().imag().cwiseAbs().maxCoeff() > 0.0) {
        throw error(errc::invalid_parameter, "passive_state expects a real diagonal Hamiltonian");
    }
    std::vector<double> energies(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        energies[static_cast<std::size_t>(i)] = hamiltonian(i, i).real();
    }
    if (!std::is_sorted(energies.begin(), energies.end())) {
        throw error(errc::invalid_parameter, "Hamiltonian levels must be nondecreasing");
    }

    const hilbert::Spectrum sp = hilbert::eig_hermitian(rho.matrix());
    // Stable sort: equal eigenvalues keep their solver index order.
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&sp](std::size_t a, std::size_t b) { return sp.values(static_cast<Eigen::Index>(a)) > sp.values(static_cast<Eigen::Index>(b)); });
    std::vector<double> pops(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < pops.size(); ++k) {
        pops[k] = std::max(0.0, sp.values(static_cast<Eigen::Index>(order[k])));
    }

    CMatrix pi = CMatrix::Zero(n, n);
    double passive_energy = 0.0;
    for (std::size_t k = 0; k < pops.size(); ++k) {
        pi(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = pops[k];
        passive_energy += pops[k] * energies[k];
    }
    pi /= pi.trace().real();
    const double energy = (rho.matrix() * hamiltonian).trace().real();
    return {DensityMatrix(pi), std::move(pops), std::move(energies), std::max(0.0, energy - passive_energy)};
}

double ergotropy(const DensityMatrix& rho, const OperatorMatrix& hamiltonian) {
    return passive_state(rho, hamiltonian).ergotropy;
}

OperatorMatrix relabeled_hamiltonian(double omega) {
    OperatorMatrix h = OperatorMatrix::Zero(3, 3);
    h(0, 0) = 0.5 * omega;
    h(1, 1) = 1.5 * omega;
    h(2, 2) = 2.5 * omega;
    return h;
}

double ergotropy_closed_form(double c2_sq, double nbar, double omega) {
    return c2_sq * omega / (2.0 * (2.0 * nbar + 1.0));
}

double ergotropy_closed_form(const interferometer::InterferometerConfig& cfg, const bath::BathSpec& spec) {
    return ergotropy_closed_form(cfg.c2_sq(), bath::mean_occupation(spec.omega(), spec.temperature()), spec.omega());
}

bool population_ordering_regime(double c2_sq, double nbar) {
    return 1.0 - c2_sq >= c2_sq * (nbar + 1.0) / (2.0 * nbar + 1.0);
}

} // namespace clausius::coherence
