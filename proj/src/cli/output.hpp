#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace sjj::cli {

using Cell = std::variant<double, long long, std::string>;
using Row = std::vector<Cell>;

// Either a table (columns + rows) or, for the JSON-object commands, a body
// whose members are merged into the JSON document. CSV always uses the table.
struct Document {
    std::string command;
    nlohmann::ordered_json config;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    nlohmann::ordered_json body;  // null for plain tables
};

// 12 significant digits; -0 prints as 0, non-finite values as inf/-inf/nan.
std::string format_number(double v);

std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);

// Writes via "<path>.partial" and renames; the partial file is removed on
// failure. Throws std::runtime_error.
void write_file_atomically(const std::string& path, const std::string& content);

}  // namespace sjj::cli
