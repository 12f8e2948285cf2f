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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdelta/cli/table.hpp"

namespace fdelta::cli {

enum class Suite { kIdentities, kRho, kSaddle, kMeanValue, kLemma21, kAll };

std::optional<Suite> parse_suite(std::string_view name);

// Every row carries labels suite, check, kind ("hard" or "report") and
// status: "pass"/"fail" for hard checks, "info"/"warn" for reports.
struct SuiteReport {
  std::vector<ResultRow> rows;
  int failures = 0;
  int warnings = 0;
};

SuiteReport verify_suite(Suite suite, const std::filesystem::path& cache_dir = {});

}  // namespace fdelta::cli
