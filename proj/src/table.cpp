// Table rendering.
// SPDX-License-Identifier: Apache-2.0
#include "dipdec/table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace dipdec {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("Table: row width " +
                               std::to_string(row.size()) +
                               " does not match " +
                               std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9e", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (const double* d = std::get_if<double>(&row[i]))
                out += format_double(*d);
            else
                out += csv_escape(std::get<std::string>(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (size_t i = 0; i < row.size(); ++i) {
            const std::string& key = table.columns[i];
            if (const double* d = std::get_if<double>(&row[i])) {
                if (std::isnan(*d))
                    obj[key] = "nan";
                else if (std::isinf(*d))
                    obj[key] = *d > 0 ? "inf" : "-inf";
                else
                    obj[key] = *d;
            } else {
                obj[key] = std::get<std::string>(row[i]);
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

}  // namespace dipdec
