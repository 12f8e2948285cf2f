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

#include "fdelta/cli/table.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>

#include <nlohmann/json.hpp>

namespace fdelta::cli {
namespace {

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_number(const Number& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  const double d = std::get<double>(v);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  if (rows.empty()) return;
  std::vector<std::string> columns;
  std::map<std::string, std::size_t> index;
  auto add = [&](const std::string& name) {
    if (index.emplace(name, columns.size()).second) columns.push_back(name);
  };
  for (const auto& row : rows) {
    for (const auto& [name, _] : row.labels) add(name);
    for (const auto& [name, _] : row.values) add(name);
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << quote_csv(columns[i]);
  out << '\n';
  for (const auto& row : rows) {
    std::vector<std::string> cells(columns.size());
    for (const auto& [name, text] : row.labels) cells[index.at(name)] = quote_csv(text);
    for (const auto& [name, v] : row.values) cells[index.at(name)] = quote_csv(format_number(v));
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  }
}

void write_json(const std::vector<ResultRow>& rows, std::ostream& out) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [name, text] : row.labels) obj[name] = text;
    for (const auto& [name, v] : row.values) {
      if (const auto* i = std::get_if<std::int64_t>(&v)) {
        obj[name] = *i;
      } else if (std::isfinite(std::get<double>(v))) {
        obj[name] = std::get<double>(v);
      } else {
        obj[name] = format_number(v);
      }
    }
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace fdelta::cli
