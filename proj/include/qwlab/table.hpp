#pragma once

#include <string>
#include <variant>
#include <vector>

namespace qwlab {

using Cell = std::variant<long long, double, std::string>;

// Column-ordered output table; doubles render with 17 significant digits so
// runs are reproducible and diffable.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render_cell(const Cell& cell);
std::string render_csv(const Table& table);

// JSON envelope: {"meta": {...}, "columns": [...], "rows": [[...], ...]}.
std::string render_json(const Table& table,
                        const std::vector<std::pair<std::string, Cell>>& meta);

}  // namespace qwlab
