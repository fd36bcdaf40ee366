#include "qwlab/table.hpp"

#include <cstdio>

#include <json.hpp>

namespace qwlab {

std::string render_cell(const Cell& cell) {
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&cell)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", *d);
        return buf;
    }
    return std::get<std::string>(cell);
}

std::string render_csv(const Table& table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += render_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    return std::get<std::string>(cell);
}

}  // namespace

std::string render_json(const Table& table,
                        const std::vector<std::pair<std::string, Cell>>& meta) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json m;
    for (const auto& [key, value] : meta) m[key] = cell_to_json(value);
    doc["meta"] = m;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& cell : row) r.push_back(cell_to_json(cell));
        rows.push_back(r);
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

}  // namespace qwlab
