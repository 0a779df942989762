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

#ifndef FREEQG_TOOLS_CLI_OUTPUT_RECORD_HPP
#define FREEQG_TOOLS_CLI_OUTPUT_RECORD_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "freeqg/bigint.hpp"

namespace freeqg::cli {

using Json = nlohmann::json;

/// One command result: {"command": ..., "params": {...}, "rows": [...]}.
/// Keys are sorted on output (nlohmann::json objects are ordered maps).
struct OutputRecord {
  OutputRecord() = default;
  explicit OutputRecord(std::string name) : command(std::move(name)) {}

  std::string command;
  Json params = Json::object();
  std::vector<Json> rows;
};

enum class Format { JsonLines, Csv };

/// Rounds to 15 significant digits before storing, so output never carries
/// the last, platform-sensitive digits of a double.
Json number(double value);

/// Big integers always travel as decimal strings.
inline Json big(const BigInt& value) { return to_decimal(value); }

void write_record(std::ostream& out, const OutputRecord& record, Format format);

}  // namespace freeqg::cli

#endif  // FREEQG_TOOLS_CLI_OUTPUT_RECORD_HPP
