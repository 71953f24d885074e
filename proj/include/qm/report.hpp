#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qm {

/// Parameters that determine a run, in insertion order. The thread count is
/// deliberately absent: it never changes the output.
struct RunConfig {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;

    RunConfig& set(const std::string& key, const std::string& value);
    RunConfig& set(const std::string& key, double value);
    RunConfig& set(const std::string& key, std::int64_t value);
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Scalar results printed after the config (CSV comment lines, JSON object).
    std::vector<std::pair<std::string, Cell>> summary;
};

/// %.17g, which round-trips every double.
std::string format_double(double v);

std::string to_csv(const RunConfig& config, const Table& table);
std::string to_json(const RunConfig& config, const Table& table);

/// Renders as "csv" or "json"; throws std::invalid_argument otherwise.
std::string render(const RunConfig& config, const Table& table, const std::string& format);

}  // namespace qm
