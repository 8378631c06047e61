#include "hilspec/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "hilspec/errors.hpp"

namespace hilspec {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string quote_if_needed(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string csv_cell(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out.push_back(';');
      out += csv_cell(value[i]);
    }
    return out;
  }
  return value.dump();  // integers and anything else
}

std::string to_csv(const std::vector<std::string>& columns,
                   const std::vector<Json>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += quote_if_needed(columns[i]);
  }
  out.push_back('\n');
  for (const Json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out.push_back(',');
      const auto it = row.find(columns[i]);
      if (it != row.end()) out += quote_if_needed(csv_cell(*it));
    }
    out.push_back('\n');
  }
  return out;
}

Json make_document(const std::string& command, const Json& params,
                   const std::vector<Json>& rows) {
  Json doc = Json::object();
  Json meta = Json::object();
  meta["command"] = command;
  meta["params"] = params;
  meta["version"] = kVersion;
  doc["meta"] = meta;
  doc["rows"] = rows;
  return doc;
}

std::string to_json_text(const Json& doc) { return doc.dump(2) + "\n"; }

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path, 0);
  out << text;
  if (!out) throw ParseError("failed writing output file: " + path, 0);
}

}  // namespace hilspec
