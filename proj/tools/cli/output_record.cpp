// Copyright 2026 The freeqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/output_record.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace freeqg::cli {

Json number(double value) {
  if (!std::isfinite(value)) return value > 0 ? "inf" : (value < 0 ? "-inf" : "nan");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  // Any decimal with <= 15 significant digits survives a round trip through
  // double, so json's shortest-form printer reproduces `buf` exactly.
  return std::strtod(buf, nullptr);
}

namespace {

std::string csv_cell(const Json& value) {
  if (value.is_null()) return {};
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

void write_record(std::ostream& out, const OutputRecord& record, Format format) {
  if (format == Format::JsonLines) {
    Json line = Json::object();
    line["command"] = record.command;
    line["params"] = record.params;
    line["rows"] = Json::array();
    for (const auto& row : record.rows) line["rows"].push_back(row);
    out << line.dump() << '\n';
    return;
  }

  std::set<std::string> columns;
  for (const auto& row : record.rows) {
    for (const auto& [key, value] : row.items()) columns.insert(key);
  }
  bool first = true;
  for (const auto& column : columns) {
    out << (first ? "" : ",") << csv_cell(column);
    first = false;
  }
  out << '\n';
  for (const auto& row : record.rows) {
    first = true;
    for (const auto& column : columns) {
      out << (first ? "" : ",") << (row.contains(column) ? csv_cell(row[column]) : "");
      first = false;
    }
    out << '\n';
  }
}

}  // namespace freeqg::cli
