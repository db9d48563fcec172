#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace deltazeta::cli {

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, scientific, locale independent.
std::string format_double(double v);

/// Header line followed by one line per row, "\n" terminated.
void write_csv(const Table& t, std::ostream& out);
/// JSON array with one object per row, keys taken from the columns.
void write_json(const Table& t, std::ostream& out);

}  // namespace deltazeta::cli
