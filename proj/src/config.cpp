#include "clausius/config.hpp"

#include "clausius/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace clausius::app {

namespace {

constexpr double room_log10_ratio = 9.52;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& key, const std::string& what) {
    throw error(errc::invalid_parameter, key + ": " + what);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        bad(key, "expected a finite number, got '" + text + "'");
    }
    return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        bad(key, "expected an integer, got '" + text + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(key, trim(item)));
    }
    if (out.empty()) {
        bad(key, "expected a comma-separated list of numbers");
    }
    return out;
}

void require_positive(const std::string& key, double v) {
    if (!(v > 0.0)) {
        bad(key, "must be positive");
    }
}

} // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{
        "omega", "temperature", "log10_omega_over_t", "gamma0", "cutoff_ratio", "c2_sq", "phi", "delta",
        "t_min", "t_max", "n",  "spacing",     "sweep_log10",        "grid_n", "p_n",          "mode",  "output",
        "seed",  "threads"};
    return keys;
}

KeyValues read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw error(errc::invalid_parameter, "cannot open config file '" + path + "'");
    }
    KeyValues kv;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = path + ":" + std::to_string(number);
        if (eq == std::string::npos) {
            throw error(errc::invalid_parameter, where + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw error(errc::invalid_parameter, where + ": empty key or value");
        }
        if (!kv.emplace(key, value).second) {
            throw error(errc::invalid_parameter, where + ": duplicate key '" + key + "'");
        }
    }
    return kv;
}

RunConfig resolve_config(const KeyValues& values) {
    const auto& keys = config_keys();
    for (const auto& [key, value] : values) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            bad(key, "unknown key");
        }
    }
    auto get = [&values](const char* key) -> const std::string* {
        const auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    };

    RunConfig c;
    if (auto v = get("omega")) {
        c.omega = parse_double("omega", *v);
        require_positive("omega", c.omega);
    }
    if (auto v = get("temperature")) {
        c.temperature = parse_double("temperature", *v);
        if (*c.temperature < 0.0) {
            bad("temperature", "must be nonnegative");
        }
    }
    if (auto v = get("log10_omega_over_t")) {
        c.log10_omega_over_t = parse_double("log10_omega_over_t", *v);
    }
    if (c.temperature && c.log10_omega_over_t) {
        bad("temperature", "temperature and log10_omega_over_t are mutually exclusive");
    }
    if (auto v = get("gamma0")) {
        c.gamma0 = parse_double("gamma0", *v);
        require_positive("gamma0", c.gamma0);
    }
    if (auto v = get("cutoff_ratio")) {
        c.cutoff_ratio = parse_double("cutoff_ratio", *v);
        require_positive("cutoff_ratio", c.cutoff_ratio);
    }
    if (auto v = get("c2_sq")) {
        c.c2_sq = parse_double("c2_sq", *v);
        if (*c.c2_sq < 0.0 || *c.c2_sq > 1.0) {
            bad("c2_sq", "must lie in [0, 1]");
        }
    }
    if (auto v = get("phi")) {
        c.phi = parse_double("phi", *v);
    }
    if (auto v = get("delta")) {
        c.delta = parse_double("delta", *v);
        require_positive("delta", c.delta);
    }
    if (auto v = get("t_min")) {
        c.t_min = parse_double("t_min", *v);
        if (*c.t_min < 0.0) {
            bad("t_min", "must be nonnegative");
        }
    }
    if (auto v = get("t_max")) {
        c.t_max = parse_double("t_max", *v);
        require_positive("t_max", *c.t_max);
    }
    if (c.t_min && c.t_max && !(*c.t_min < *c.t_max)) {
        bad("t_max", "must exceed t_min");
    }
    if (auto v = get("n")) {
        const long long n = parse_integer("n", *v);
        if (n < 1 || n > 1000000) {
            bad("n", "must be between 1 and 1000000");
        }
        c.n = static_cast<int>(n);
    }
    if (auto v = get("spacing")) {
        if (*v == "log") {
            c.spacing = Spacing::log;
        } else if (*v == "linear") {
            c.spacing = Spacing::linear;
        } else {
            bad("spacing", "expected 'log' or 'linear'");
        }
    }
    if (c.spacing == Spacing::log && c.t_min && *c.t_min <= 0.0) {
        bad("t_min", "must be positive for log spacing");
    }
    if (auto v = get("sweep_log10")) {
        c.sweep_log10 = parse_list("sweep_log10", *v);
    }
    if (auto v = get("grid_n")) {
        const long long n = parse_integer("grid_n", *v);
        if (n < 2 || n > 2000) {
            bad("grid_n", "must be between 2 and 2000");
        }
        c.grid_n = static_cast<int>(n);
    }
    if (auto v = get("p_n")) {
        const long long n = parse_integer("p_n", *v);
        if (n < 2 || n > 100000) {
            bad("p_n", "must be between 2 and 100000");
        }
        c.p_n = static_cast<int>(n);
    }
    if (auto v = get("mode")) {
        if (*v != "markovian" && *v != "secular") {
            bad("mode", "expected 'markovian' or 'secular'");
        }
        c.mode = *v;
    }
    if (auto v = get("output")) {
        c.output = *v;
    }
    if (auto v = get("seed")) {
        const long long s = parse_integer("seed", *v);
        if (s < 0) {
            bad("seed", "must be nonnegative");
        }
        c.seed = static_cast<std::uint64_t>(s);
    }
    if (auto v = get("threads")) {
        const long long t = parse_integer("threads", *v);
        if (t < 0 || t > 4096) {
            bad("threads", "must be between 0 and 4096");
        }
        c.threads = static_cast<int>(t);
    }
    return c;
}

double RunConfig::resolved_temperature() const {
    if (temperature) {
        return *temperature;
    }
    return bath::temperature_from_log_ratio(omega, log10_omega_over_t.value_or(room_log10_ratio));
}

bath::BathSpec RunConfig::bath() const {
    return bath::BathSpec::from_ratio(gamma0, cutoff_ratio, omega, resolved_temperature());
}

bath::BathSpec RunConfig::bath_at_log_ratio(double log10_ratio) const {
    return bath::BathSpec::from_ratio(gamma0, cutoff_ratio, omega, bath::temperature_from_log_ratio(omega, log10_ratio));
}

interferometer::InterferometerConfig RunConfig::interferometer(double default_c2_sq) const {
    return interferometer::InterferometerConfig::from_c2_sq(c2_sq.value_or(default_c2_sq), phi, delta);
}

} // namespace clausius::app
