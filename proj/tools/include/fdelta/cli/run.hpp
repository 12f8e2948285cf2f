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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdelta/cli/table.hpp"

namespace fdelta::cli {

enum class Command { kDelta, kPsi, kRho, kXi, kAlpha, kMeanValue, kVerify };
enum class Format { kCsv, kJson };

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitConvergence = 4;

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

// Parameter keys accepted by a command.
std::span<const std::string_view> allowed_keys(Command c);

struct RunConfig {
  Command command = Command::kVerify;
  std::map<std::string, std::string> parameters;
  Format format = Format::kCsv;
  std::filesystem::path cache_dir;  // empty disables the prime-table cache
};

// Throws InvalidArgument for unknown keys, missing required keys and values
// that do not parse or lie outside the accepted range.
void validate(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  std::vector<ResultRow> rows;
  std::string diagnostic;  // set when exit_code != kExitOk
};

// Validates and executes. Never throws for library errors; they are mapped
// onto the exit codes above.
RunResult run(const RunConfig& config);

// The --cache-dir flag if given, else $FDELTA_CACHE_DIR, else
// $XDG_CACHE_HOME/fdelta, else $HOME/.cache/fdelta, else empty.
std::filesystem::path resolve_cache_dir(const std::string& flag);

}  // namespace fdelta::cli
