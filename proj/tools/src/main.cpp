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

#include <chrono>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fdelta/cli/run.hpp"

namespace {

const std::map<std::string, std::string> kKeyHelp = {
    {"n", "positive integer"},
    {"x", "upper limit, 1 <= x < 9.2e18"},
    {"y", "friability bound, y >= 2"},
    {"method", "exact, hildebrand or saddle (default exact)"},
    {"step", "rho table step, 1/N with N >= 256 (default 2^-10)"},
    {"v", "argument, 0 <= v <= 1000"},
    {"kappa", "order of rho_kappa (default 1)"},
    {"t", "argument, t >= 1"},
    {"suite", "identities, rho, saddle, meanvalue, lemma21 or all (default all)"},
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  using fdelta::cli::Command;
  CLI::App app{"Delta function, friable counts and the special functions around them"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string cache_flag;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache-dir", cache_flag, "Prime table cache (default: $FDELTA_CACHE_DIR, then the user cache)");

  std::map<std::string, std::string> params;
  std::map<CLI::App*, Command> commands;
  const std::map<Command, std::string> help = {
      {Command::kDelta, "Delta(n) and tau(n)"},
      {Command::kPsi, "Psi(x, y) by exact count or an approximation"},
      {Command::kRho, "rho_kappa(v)"},
      {Command::kXi, "xi(t), xi'(t) and the integral of xi over [1, t]"},
      {Command::kAlpha, "saddle point alpha(x, y)"},
      {Command::kMeanValue, "friable mean value of Delta with its bounds"},
      {Command::kVerify, "run a verification suite"},
  };
  for (const auto& [cmd, text] : help) {
    CLI::App* sub = app.add_subcommand(std::string(fdelta::cli::command_name(cmd)), text);
    commands[sub] = cmd;
    for (std::string_view key : fdelta::cli::allowed_keys(cmd)) {
      const std::string k(key);
      sub->add_option_function<std::string>(
          "--" + k, [&params, k](const std::string& v) { params[k] = v; }, kKeyHelp.at(k));
    }
    // Global options are also accepted after the subcommand.
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fdelta::cli::kExitInvalid;
  }

  fdelta::cli::RunConfig config;
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) config.command = cmd;
  }
  config.parameters = params;
  config.format = format == "json" ? fdelta::cli::Format::kJson : fdelta::cli::Format::kCsv;
  config.cache_dir = fdelta::cli::resolve_cache_dir(cache_flag);

  const auto begin = std::chrono::steady_clock::now();
  std::cerr << "fdelta: " << fdelta::cli::command_name(config.command) << " started " << utc_now() << '\n';
  const auto result = fdelta::cli::run(config);
  if (!result.rows.empty() || result.exit_code == fdelta::cli::kExitOk ||
      result.exit_code == fdelta::cli::kExitCheckFailed) {
    if (config.format == fdelta::cli::Format::kJson) {
      fdelta::cli::write_json(result.rows, std::cout);
    } else {
      fdelta::cli::write_csv(result.rows, std::cout);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  if (!result.diagnostic.empty()) std::cerr << "fdelta: error: " << result.diagnostic << '\n';
  std::fprintf(stderr, "fdelta: finished in %.2f s, exit %d\n", secs, result.exit_code);
  return result.exit_code;
}
