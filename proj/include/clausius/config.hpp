// config.hpp: run configuration for the CLI. Flat key=value files, with every
// key also accepted as a --key value flag; flags win over the file.

#pragma once

#include "clausius/bath.hpp"
#include "clausius/interferometer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clausius::app {

enum class Spacing { log, linear };

struct RunConfig {
    double omega = 1e12;
    std::optional<double> temperature;
    std::optional<double> log10_omega_over_t;
    double gamma0 = 1.5e-3;
    double cutoff_ratio = 10.0;
    std::optional<double> c2_sq;
    double phi = 0.0;
    double delta = 6.0;
    std::optional<double> t_min;
    std::optional<double> t_max;
    std::optional<int> n;
    std::optional<Spacing> spacing;
    std::optional<std::vector<double>> sweep_log10;
    std::optional<int> grid_n;
    std::optional<int> p_n;
    std::string mode = "markovian";
    std::string output;
    std::uint64_t seed = 20231017;
    int threads = 0;

    /// Room temperature (log10(Omega/T) = 9.52) when neither temperature key is set.
    double resolved_temperature() const;
    bath::BathSpec bath() const;
    bath::BathSpec bath_at_log_ratio(double log10_ratio) const;
    interferometer::InterferometerConfig interferometer(double default_c2_sq = 0.5) const;
};

using KeyValues = std::map<std::string, std::string>;

/// Reads `key = value` lines; '#' starts a comment. Throws invalid-parameter
/// naming the file and line on malformed input or duplicate keys.
KeyValues read_config_file(const std::string& path);

/// Validates keys and values and fills defaults. Errors name the key.
RunConfig resolve_config(const KeyValues& values);

/// Every key resolve_config accepts.
const std::vector<std::string>& config_keys();

} // namespace clausius::app
