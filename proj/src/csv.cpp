#include "clausius/csv.hpp"

#include "clausius/errors.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace clausius::app {

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

void write_csv(const Dataset& ds, std::ostream& out) {
    for (std::size_t i = 0; i < ds.columns.size(); ++i) {
        out << (i ? "," : "") << ds.columns[i];
    }
    out << '\n';
    for (const auto& row : ds.rows) {
        if (row.size() != ds.columns.size()) {
            throw error(errc::invalid_parameter, "dataset row width does not match header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "");
            if (const double* d = std::get_if<double>(&row[i])) {
                out << format_number(*d);
            } else {
                out << (std::get<bool>(row[i]) ? "true" : "false");
            }
        }
        out << '\n';
    }
}

void write_dataset(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_csv(ds, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

} // namespace clausius::app
