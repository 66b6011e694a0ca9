// csv.hpp: figure datasets and their CSV serialization.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace clausius::app {

using Cell = std::variant<double, bool>;

struct Dataset {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Scientific notation with 17 significant digits, locale independent.
std::string format_number(double v);

/// Header row then one line per row, LF endings. Throws invalid-parameter on
/// ragged rows.
void write_csv(const Dataset& ds, std::ostream& out);

/// Writes to `path`; throws std::runtime_error on I/O failure.
void write_dataset(const Dataset& ds, const std::string& path);

} // namespace clausius::app
