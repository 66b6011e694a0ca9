// clausius: figure datasets, the verification suite and free evolution.
//
//   clausius figure <id> [--config PATH] [--out PATH] [--key value ...]
//   clausius verify [--config PATH] [--key value ...]
//   clausius evolve [--config PATH] [--dim N] [--key value ...]
//
// Exit codes: 0 success, 1 failed checks or runtime failure, 2 usage error.

#include "clausius/coherence.hpp"
#include "clausius/config.hpp"
#include "clausius/csv.hpp"
#include "clausius/dynamics.hpp"
#include "clausius/errors.hpp"
#include "clausius/figures.hpp"
#include "clausius/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <memory>
#include <map>
#include <string>

namespace {

using namespace clausius;
using namespace clausius::app;

struct Overrides {
    std::map<std::string, std::string> values;
    std::string config_path;
    std::string threads;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "key = value configuration file");
        for (const std::string& key : config_keys()) {
            if (key == "threads") {
                continue;
            }
            cmd->add_option("--" + key, values[key], "overrides '" + key + "'");
        }
        cmd->add_option("--threads", threads, "OpenMP threads for sweeps (0: runtime default)");
    }

    RunConfig resolve() const {
        KeyValues kv;
        if (!config_path.empty()) {
            kv = read_config_file(config_path);
        }
        for (const auto& [key, value] : values) {
            if (!value.empty()) {
                kv[key] = value;
            }
        }
        if (!threads.empty()) {
            kv["threads"] = threads;
        }
        return resolve_config(kv);
    }
};

void emit(const Dataset& ds, const std::string& path) {
    if (path.empty() || path == "-") {
        write_csv(ds, std::cout);
        std::cout.flush();
        if (!std::cout) {
            throw std::runtime_error("write to stdout failed");
        }
    } else {
        write_dataset(ds, path);
    }
}

int run_figure_command(const std::string& id, const RunConfig& cfg, const std::string& out) {
    const FigureResult r = run_figure(id, cfg, Execution::parallel);
    if (r.projected_rows > 0) {
        std::cerr << "warning: " << r.projected_rows
                  << " rows used a closed-form state projected onto a valid density matrix (min eigenvalue "
                  << r.worst_min_eigenvalue << ")\n";
    }
    emit(r.data, out.empty() ? cfg.output : out);
    return 0;
}

int run_verify_command(const RunConfig& cfg) {
    const VerifyReport report = run_verify(cfg);
    print_report(report, std::cout);
    return report.exit_code();
}

int run_evolve_command(const RunConfig& cfg, int dim) {
    if (dim < 3 || dim > 64) {
        throw error(errc::invalid_parameter, "dim: must be between 3 and 64");
    }
    const bath::BathSpec spec = cfg.bath();
    const std::vector<double> times = time_grid(cfg, 1e-10, 1e-7, 50, Spacing::log);
    const DensityMatrix rho0 = dynamics::embed(interferometer::initial_density(cfg.interferometer(0.5)), dim);

    dynamics::Trajectory tr;
    if (cfg.mode == "secular") {
        auto table = std::make_shared<bath::CoefficientTable>(
            bath::CoefficientTable::sample(spec, times.back(), 2000, Execution::parallel));
        const auto gen = dynamics::LindbladGenerator::secular(
            dim, [table](double t) { return (*table)(t); }, table->max_rate());
        tr = dynamics::evolve(rho0, gen, times);
    } else {
        tr = dynamics::evolve(rho0, dynamics::LindbladGenerator::markovian(dim, bath::asymptotic_rates(spec)), times);
    }

    OperatorMatrix h = OperatorMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        h(k, k) = cfg.omega * (k + 0.5);
    }
    Dataset ds;
    ds.columns = {"t", "trace_drift", "min_eigenvalue", "entropy", "energy", "C_d"};
    for (int k = 0; k < dim; ++k) {
        ds.columns.push_back("p" + std::to_string(k));
    }
    for (const auto& pt : tr.points) {
        std::vector<Cell> row{pt.t,
                              pt.trace_drift,
                              pt.min_eigenvalue,
                              hilbert::von_neumann_entropy(pt.rho),
                              (pt.rho.matrix() * h).trace().real(),
                              coherence::distillable_coherence(pt.rho)};
        for (int k = 0; k < dim; ++k) {
            row.emplace_back(pt.rho(k, k).real());
        }
        ds.rows.push_back(std::move(row));
    }
    emit(ds, cfg.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Open-system interferometer: figure datasets, verification and free evolution"};
    app.require_subcommand(1);

    Overrides fig_opts;
    Overrides verify_opts;
    Overrides evolve_opts;
    std::string figure_id;
    std::string out;
    int dim = 3;

    CLI::App* fig = app.add_subcommand("figure", "write a figure dataset as CSV");
    fig->add_option("id", figure_id, "fig2a, fig2b, fig3a, fig3b, fig4 or fig5")->required();
    fig->add_option("--out", out, "output path (default: stdout)");
    fig_opts.attach(fig);

    CLI::App* ver = app.add_subcommand("verify", "run the cross-check suite");
    verify_opts.attach(ver);

    CLI::App* evo = app.add_subcommand("evolve", "integrate the master equation from the pre-bath state");
    evo->add_option("--dim", dim, "Fock-space truncation");
    evolve_opts.attach(evo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    try {
        const Overrides& chosen = fig->parsed() ? fig_opts : ver->parsed() ? verify_opts : evolve_opts;
        cfg = chosen.resolve();
        if (fig->parsed()) {
            const auto& ids = figure_ids();
            if (std::find(ids.begin(), ids.end(), figure_id) == ids.end()) {
                throw error(errc::invalid_parameter, "unknown figure id '" + figure_id + "'");
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    set_sweep_threads(cfg.threads);

    try {
        if (fig->parsed()) {
            return run_figure_command(figure_id, cfg, out);
        }
        if (ver->parsed()) {
            return run_verify_command(cfg);
        }
        return run_evolve_command(cfg, dim);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::invalid_parameter ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
