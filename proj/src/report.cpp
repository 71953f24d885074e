#include "qm/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qm {

RunConfig& RunConfig::set(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
    return *this;
}

RunConfig& RunConfig::set(const std::string& key, double value) { return set(key, format_double(value)); }

RunConfig& RunConfig::set(const std::string& key, std::int64_t value) { return set(key, std::to_string(value)); }

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) return *d;
        return format_double(*d);
    }
    return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const RunConfig& config, const Table& table) {
    std::ostringstream os;
    os << "# schema=v1\n";
    os << "# command=" << config.command << "\n";
    for (const auto& [k, v] : config.params) os << "# config." << k << "=" << v << "\n";
    for (const auto& [k, v] : table.summary) os << "# summary." << k << "=" << cell_text(v) << "\n";
    for (std::size_t j = 0; j < table.columns.size(); ++j) os << (j ? "," : "") << csv_escape(table.columns[j]);
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_escape(cell_text(row[j]));
        os << "\n";
    }
    return os.str();
}

std::string to_json(const RunConfig& config, const Table& table) {
    nlohmann::ordered_json doc;
    doc["schema"] = "v1";
    doc["command"] = config.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config.params) cfg[k] = v;
    doc["config"] = cfg;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    for (const auto& [k, v] : table.summary) summary[k] = cell_json(v);
    doc["summary"] = summary;
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (std::size_t j = 0; j < row.size() && j < table.columns.size(); ++j) r[table.columns[j]] = cell_json(row[j]);
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::string render(const RunConfig& config, const Table& table, const std::string& format) {
    if (format == "csv") return to_csv(config, table);
    if (format == "json") return to_json(config, table);
    throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace qm
