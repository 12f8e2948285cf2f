// Copyright 2026 The fdelta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fdelta::cli {

using Number = std::variant<std::int64_t, double>;

struct ResultRow {
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<std::string, Number>> values;

  ResultRow& label(std::string name, std::string text) {
    labels.emplace_back(std::move(name), std::move(text));
    return *this;
  }
  ResultRow& value(std::string name, Number v) {
    values.emplace_back(std::move(name), v);
    return *this;
  }
};

// Shortest representation that parses back to the same value (at most 17
// significant digits); "inf", "-inf" and "nan" for non-finite doubles.
std::string format_number(const Number& v);

// Columns are the union of all row keys in first-seen order, labels before
// values within a row; absent cells are empty. RFC 4180 quoting. No rows
// writes nothing.
void write_csv(const std::vector<ResultRow>& rows, std::ostream& out);

// One top-level array of objects. Non-finite doubles are written as the
// strings used by format_number.
void write_json(const std::vector<ResultRow>& rows, std::ostream& out);

}  // namespace fdelta::cli
