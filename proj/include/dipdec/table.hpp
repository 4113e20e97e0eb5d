// Deterministic tabular output: named columns, numeric or text cells,
// CSV and JSON renderers with fixed formatting so identical inputs give
// byte-identical files.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dipdec {

struct Table {
    using Cell = std::variant<double, std::string>;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Appends a row; throws std::logic_error on column-count mismatch.
    void add_row(std::vector<Cell> row);
};

// Fixed scientific-notation rendering used by both serializers ("%.9e";
// round-trips doubles re-parsed from the text to 1e-9 relative).
std::string format_double(double v);

// RFC-4180-style: header row, comma separation, LF line endings, quoting
// only where required.
std::string to_csv(const Table& table);

// Array of one object per row, keys = column names, 2-space indentation.
// Non-finite numbers render as the strings "inf", "-inf", "nan".
std::string to_json(const Table& table);

}  // namespace dipdec
