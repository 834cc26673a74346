// report.cpp — CSV/JSON serialization of run reports.

#include "hj/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "hj/common.hpp"

namespace hj {

void report::add_meta(const std::string& key, const std::string& value) {
    metadata.push_back({key, value});
}

void report::add_row(std::vector<cell> row) {
    if (row.size() != columns.size())
        fail(status::internal, "report row width does not match columns");
    rows.push_back(std::move(row));
}

namespace {

// CSV field quoting per RFC 4180: quote when a comma, quote, or newline is
// present; double embedded quotes.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const report::cell& c) {
    struct visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double x) const {
            return std::isfinite(x) ? fmt17(x) : (x > 0 ? "inf" : (x < 0 ? "-inf" : "nan"));
        }
        std::string operator()(long long n) const { return std::to_string(n); }
        std::string operator()(bool b) const { return b ? "1" : "0"; }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(visitor{}, c);
}

}  // namespace

std::string report::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(columns[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cell_text(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string report::to_json() const {
    nlohmann::ordered_json j;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const cell& c = row[i];
            if (std::holds_alternative<std::monostate>(c))
                rec[columns[i]] = nullptr;
            else if (std::holds_alternative<double>(c)) {
                const double x = std::get<double>(c);
                // JSON has no inf/nan literals; fall back to strings there.
                if (std::isfinite(x))
                    rec[columns[i]] = x;
                else
                    rec[columns[i]] = cell_text(c);
            } else if (std::holds_alternative<long long>(c))
                rec[columns[i]] = std::get<long long>(c);
            else if (std::holds_alternative<bool>(c))
                rec[columns[i]] = std::get<bool>(c);
            else
                rec[columns[i]] = std::get<std::string>(c);
        }
        rows_json.push_back(std::move(rec));
    }
    j["rows"] = std::move(rows_json);
    return j.dump(2) + "\n";
}

std::string report::render(const std::string& format) const {
    if (format == "csv") return to_csv();
    if (format == "json") return to_json();
    fail(status::invalid_argument, "unknown report format: " + format);
}

void report::write(const std::string& path, const std::string& format) const {
    const std::string body = render(format);
    if (path.empty() || path == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(status::io, "cannot open output file: " + path);
    f << body;
    if (!f) fail(status::io, "write failed: " + path);
}

}  // namespace hj
