#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hilspec {

inline constexpr const char* kVersion = "0.1.0";

// Insertion-ordered JSON: field order in the output matches construction
// order, which keeps serialized documents deterministic.
using Json = nlohmann::ordered_json;

// 17 significant digits: enough for exact double round-trips.
std::string format_double(double v);

// One CSV cell. Scalars print directly (floats via format_double), arrays
// collapse to a semicolon-joined list, null prints empty.
std::string csv_cell(const Json& value);

// Header plus one line per row, RFC-4180 quoting, '\n' line ends. Cells
// are looked up by column name so every row shares the same layout; a
// missing field yields an empty cell. Empty rows give a header-only table.
std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<Json>& rows);

// {meta: {command, params, version}, rows: [...]}
Json make_document(const std::string& command, const Json& params,
                   const std::vector<Json>& rows);

std::string to_json_text(const Json& doc);

// Empty path or "-" writes to stdout; anything else to the named file.
// Throws ParseError (the I/O error family) when the file cannot be written.
void write_text(const std::string& text, const std::string& path);

}  // namespace hilspec
