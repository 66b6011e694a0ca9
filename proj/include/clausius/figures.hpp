// figures.hpp: dataset generators for the six figure panels.

#pragma once

#include "clausius/config.hpp"
#include "clausius/csv.hpp"
#include "clausius/sweep.hpp"

#include <span>
#include <string>
#include <vector>

namespace clausius::app {

struct FigureResult {
    Dataset data;
    /// Rows whose closed-form state had to be projected onto a valid state.
    std::size_t projected_rows = 0;
    double worst_min_eigenvalue = 0.0;
};

const std::vector<std::string>& figure_ids();

/// Throws invalid-parameter for an unknown id or a configuration the figure
/// cannot use.
FigureResult run_figure(const std::string& id, const RunConfig& cfg, Execution ex = Execution::serial);

/// Grid with n points from lo to hi (inclusive).
std::vector<double> make_grid(double lo, double hi, int n, Spacing spacing);

/// Time grid from the config, falling back to the given defaults.
std::vector<double> time_grid(const RunConfig& cfg, double t_min, double t_max, int n, Spacing spacing);

} // namespace clausius::app
