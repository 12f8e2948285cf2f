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

#include "fdelta/cli/run.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <new>

#include "common.hpp"
#include "fdelta/arith.hpp"
#include "fdelta/cli/verify.hpp"
#include "fdelta/error.hpp"
#include "fdelta/friable.hpp"
#include "fdelta/saddle.hpp"
#include "fdelta/specfun.hpp"

namespace fdelta::cli {
namespace {

enum class Kind { kInteger, kReal, kMethod, kSuite };

struct KeySpec {
  std::string_view key;
  Kind kind;
  bool required;
  double lo = 0.0;  // inclusive bounds for numeric keys
  double hi = 0.0;
};

constexpr double kMaxX = 9.2e18;  // below 2^63
constexpr double kDefaultStep = 1.0 / 1024.0;

constexpr KeySpec kN{"n", Kind::kInteger, true, 1.0, kMaxX};
constexpr KeySpec kX{"x", Kind::kReal, true, 1.0, kMaxX};
constexpr KeySpec kY{"y", Kind::kReal, true, 2.0, kMaxX};
constexpr KeySpec kKappa{"kappa", Kind::kReal, false, 1e-6, 1e3};
constexpr KeySpec kV{"v", Kind::kReal, true, 0.0, 1e3};
constexpr KeySpec kT{"t", Kind::kReal, true, 1.0, 1e300};
constexpr KeySpec kStep{"step", Kind::kReal, false, 1e-6, 1.0};
constexpr KeySpec kMethod{"method", Kind::kMethod, false};
constexpr KeySpec kSuite{"suite", Kind::kSuite, false};

constexpr std::array kDeltaKeys{kN};
constexpr std::array kPsiKeys{kX, kY, kMethod, kStep};
constexpr std::array kRhoKeys{kV, kKappa, kStep};
constexpr std::array kXiKeys{kT};
constexpr std::array kAlphaKeys{kX, kY};
constexpr std::array kMeanValueKeys{kX, kY};
constexpr std::array kVerifyKeys{kSuite};

std::span<const KeySpec> key_specs(Command c) {
  switch (c) {
    case Command::kDelta: return kDeltaKeys;
    case Command::kPsi: return kPsiKeys;
    case Command::kRho: return kRhoKeys;
    case Command::kXi: return kXiKeys;
    case Command::kAlpha: return kAlphaKeys;
    case Command::kMeanValue: return kMeanValueKeys;
    case Command::kVerify: return kVerifyKeys;
  }
  return {};
}

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw InvalidArgument("--" + key + ": '" + text + "' is not a finite number");
  }
  return v;
}

std::uint64_t parse_integer(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InvalidArgument("--" + key + ": '" + text + "' is not an integer");
  return v;
}

enum class Method { kExact, kHildebrand, kSaddle };

std::optional<Method> parse_method(std::string_view s) {
  if (s == "exact") return Method::kExact;
  if (s == "hildebrand") return Method::kHildebrand;
  if (s == "saddle") return Method::kSaddle;
  return std::nullopt;
}

// Typed view of a validated parameter map.
class Params {
 public:
  explicit Params(const RunConfig& c) : map_(c.parameters) {}

  bool has(const std::string& key) const { return map_.count(key) > 0; }
  double real(const std::string& key, double fallback = 0.0) const {
    return has(key) ? parse_real(key, map_.at(key)) : fallback;
  }
  std::uint64_t integer(const std::string& key) const { return parse_integer(key, map_.at(key)); }
  std::string text(const std::string& key, std::string fallback) const {
    return has(key) ? map_.at(key) : std::move(fallback);
  }

 private:
  const std::map<std::string, std::string>& map_;
};

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<ResultRow> run_delta(const Params& p) {
  const std::uint64_t n = p.integer("n");
  const arith::DivisorLogSet d(arith::factor(n));
  return {ResultRow{}.value("n", as_int(n)).value("delta", as_int(arith::delta(d))).value("tau", as_int(d.size()))};
}

std::vector<ResultRow> run_psi(const Params& p, const std::filesystem::path& cache_dir) {
  const double x = p.real("x");
  const double y = p.real("y");
  const auto fp = friable::FriablePair::make(std::max(x, 1.0 + 1e-12), y);
  const std::string method = p.text("method", "exact");
  ResultRow row;
  row.label("method", method).value("x", x).value("y", y).value("u", x > 1.0 ? fp.u : 0.0);
  switch (*parse_method(method)) {
    case Method::kExact: {
      const auto pt = detail::primes_for(y, cache_dir);
      row.value("psi", as_int(friable::psi_exact(x, y, pt)));
      break;
    }
    case Method::kHildebrand: {
      const double step = p.real("step", kDefaultStep);
      const auto rho = specfun::rho_table(1.0, std::max(2.0, fp.u) + 1.0, step);
      row.value("psi", saddle::psi_hildebrand(x, y, rho));
      break;
    }
    case Method::kSaddle: {
      const auto pt = detail::primes_for(y, cache_dir);
      row.value("psi", saddle::psi_saddle(saddle::solve_alpha(x, y, pt)));
      break;
    }
  }
  return {row};
}

std::vector<ResultRow> run_rho(const Params& p) {
  const double kappa = p.real("kappa", 1.0);
  const double v = p.real("v");
  const double step = p.real("step", kDefaultStep);
  const auto table = specfun::rho_table(kappa, std::max(v, 2.0) + 1.0, step);
  return {ResultRow{}.value("kappa", kappa).value("v", v).value("step", step).value("rho", table(v))};
}

std::vector<ResultRow> run_xi(const Params& p) {
  const double t = p.real("t");
  ResultRow row;
  row.value("t", t).value("xi", specfun::xi(t));
  if (t > 1.0) row.value("xi_prime", specfun::xi_prime(t));
  row.value("xi_integral", specfun::xi_integral(t));
  return {row};
}

std::vector<ResultRow> run_alpha(const Params& p, const std::filesystem::path& cache_dir) {
  const double x = p.real("x");
  const double y = p.real("y");
  const auto pt = detail::primes_for(y, cache_dir);
  const auto sd = saddle::solve_alpha(x, y, pt);
  const auto fp = friable::FriablePair::make(x, y);
  return {ResultRow{}
              .value("x", x)
              .value("y", y)
              .value("u", fp.u)
              .value("alpha", sd.alpha)
              .value("beta", sd.beta)
              .value("residual", sd.phi_alpha - std::log(x))
              .value("phi_prime", sd.phi_prime_alpha)
              .value("log_zeta", sd.log_zeta_alpha_y)};
}

std::vector<ResultRow> run_meanvalue(const Params& p, const std::filesystem::path& cache_dir) {
  const double x = p.real("x");
  const double y = p.real("y");
  const auto pt = detail::primes_for(y, cache_dir);
  const auto sums = friable::friable_sums(x, y, pt);
  const auto fp = friable::FriablePair::make(x, y);
  const double s = sums.mean_value();
  const double tau_mean = static_cast<double>(sums.sum_tau) / static_cast<double>(sums.psi);
  return {ResultRow{}
              .value("x", x)
              .value("y", y)
              .value("u", fp.u)
              .value("lambda", fp.lambda)
              .value("psi", as_int(sums.psi))
              .value("sum_delta", as_int(sums.sum_delta))
              .value("sum_tau", as_int(sums.sum_tau))
              .value("S", s)
              .value("lower", tau_mean / (2.0 * std::log(x)))
              .value("upper", tau_mean)
              .value("statistic", std::log(s) / (specfun::g_func(fp.lambda) * fp.u))};
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (Command c : {Command::kDelta, Command::kPsi, Command::kRho, Command::kXi, Command::kAlpha,
                    Command::kMeanValue, Command::kVerify}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kDelta: return "delta";
    case Command::kPsi: return "psi";
    case Command::kRho: return "rho";
    case Command::kXi: return "xi";
    case Command::kAlpha: return "alpha";
    case Command::kMeanValue: return "meanvalue";
    case Command::kVerify: return "verify";
  }
  return "";
}

std::span<const std::string_view> allowed_keys(Command c) {
  static const auto table = [] {
    std::array<std::vector<std::string_view>, 7> t;
    for (int i = 0; i < 7; ++i) {
      for (const auto& spec : key_specs(static_cast<Command>(i))) t[i].push_back(spec.key);
    }
    return t;
  }();
  return table[static_cast<int>(c)];
}

void validate(const RunConfig& config) {
  const auto specs = key_specs(config.command);
  const std::string cmd(command_name(config.command));
  for (const auto& [key, _] : config.parameters) {
    if (std::none_of(specs.begin(), specs.end(), [&](const KeySpec& s) { return s.key == key; })) {
      throw InvalidArgument(cmd + ": unknown parameter '" + key + "'");
    }
  }
  for (const auto& spec : specs) {
    const std::string key(spec.key);
    const auto it = config.parameters.find(key);
    if (it == config.parameters.end()) {
      if (spec.required) throw InvalidArgument(cmd + ": missing required parameter --" + key);
      continue;
    }
    const std::string& text = it->second;
    double v = 0.0;
    switch (spec.kind) {
      case Kind::kInteger: v = static_cast<double>(parse_integer(key, text)); break;
      case Kind::kReal: v = parse_real(key, text); break;
      case Kind::kMethod:
        if (!parse_method(text)) throw InvalidArgument("--method must be exact, hildebrand or saddle");
        continue;
      case Kind::kSuite:
        if (!parse_suite(text)) {
          throw InvalidArgument("--suite must be identities, rho, saddle, meanvalue, lemma21 or all");
        }
        continue;
    }
    if (!(v >= spec.lo && v <= spec.hi)) {
      throw InvalidArgument("--" + key + " = " + text + " is outside [" + format_number(spec.lo) + ", " +
                            format_number(spec.hi) + "]");
    }
  }
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    validate(config);
    const Params p(config);
    switch (config.command) {
      case Command::kDelta: result.rows = run_delta(p); break;
      case Command::kPsi: result.rows = run_psi(p, config.cache_dir); break;
      case Command::kRho: result.rows = run_rho(p); break;
      case Command::kXi: result.rows = run_xi(p); break;
      case Command::kAlpha: result.rows = run_alpha(p, config.cache_dir); break;
      case Command::kMeanValue: result.rows = run_meanvalue(p, config.cache_dir); break;
      case Command::kVerify: {
        auto report = verify_suite(*parse_suite(p.text("suite", "all")), config.cache_dir);
        result.rows = std::move(report.rows);
        if (report.failures > 0) {
          result.exit_code = kExitCheckFailed;
          result.diagnostic = std::to_string(report.failures) + " hard check(s) failed";
        }
        break;
      }
    }
  } catch (const InvalidArgument& e) {
    result = {kExitInvalid, {}, e.what()};
  } catch (const BudgetExceeded& e) {
    result = {kExitBudget, {}, e.what()};
  } catch (const std::bad_alloc&) {
    result = {kExitBudget, {}, "out of memory"};
  } catch (const ConvergenceError& e) {
    result = {kExitConvergence, {}, e.what()};
  } catch (const std::exception& e) {
    result = {kExitCheckFailed, {}, std::string("internal error: ") + e.what()};
  }
  return result;
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("FDELTA_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fdelta";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "fdelta";
  }
  return {};
}

}  // namespace fdelta::cli
