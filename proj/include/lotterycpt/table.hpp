#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lotterycpt {

/// One output cell. std::monostate renders as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Shortest round-trip text of `x` after rounding to 12 significant digits.
/// Locale independent.
std::string format_number(double x);

/// Header line then one line per row, comma separated, LF line endings.
/// Fields containing a comma, quote or newline are quoted.
void write_csv(std::ostream& out, const Table& table);

/// A JSON array of objects keyed by column name, one per row.
void write_json(std::ostream& out, const Table& table);

}  // namespace lotterycpt
