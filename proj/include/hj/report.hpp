// report.hpp — tabular run output: a column schema, typed rows, and an
// ordered metadata block, serialized as CSV (header row + records) or JSON
// ({"metadata": {...}, "rows": [...]}).
//
// Serialization is deterministic: doubles are printed with 17 significant
// digits (exact round-trip), metadata preserves insertion order, and rows are
// emitted in the order they were added — identical inputs give byte-identical
// files.

#pragma once

#include <string>
#include <variant>
#include <vector>

namespace hj {

struct report {
    // A cell is empty (monostate) when the quantity does not exist for the
    // row (e.g. the Dirichlet point of the semi-infinite gap).
    using cell = std::variant<std::monostate, double, long long, bool,
                              std::string>;

    std::vector<std::string> columns;
    std::vector<std::vector<cell>> rows;
    // Ordered (key, value) metadata: config echo, tolerances, defaults.
    std::vector<std::pair<std::string, std::string>> metadata;

    void add_meta(const std::string& key, const std::string& value);
    void add_row(std::vector<cell> row);  // must match columns.size()

    std::string to_csv() const;
    std::string to_json() const;
    std::string render(const std::string& format) const;  // "csv" | "json"

    // Write to a file; path "" or "-" writes to stdout.
    void write(const std::string& path, const std::string& format) const;
};

}  // namespace hj
