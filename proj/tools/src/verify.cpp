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

#include "fdelta/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "common.hpp"
#include "fdelta/arith.hpp"
#include "fdelta/friable.hpp"
#include "fdelta/quadrature.hpp"
#include "fdelta/saddle.hpp"
#include "fdelta/specfun.hpp"

namespace fdelta::cli {
namespace {

using arith::DivisorLogSet;
using arith::Factorization;

constexpr std::uint64_t kSeed = 0x5eed'f0e1'7a00'0001ULL;

class Reporter {
 public:
  explicit Reporter(std::string suite) : suite_(std::move(suite)) {}

  ResultRow& hard(const std::string& check, bool ok) {
    if (!ok) ++report_.failures;
    return add(check, "hard", ok ? "pass" : "fail");
  }
  ResultRow& report(const std::string& check, bool as_expected = true) {
    if (!as_expected) ++report_.warnings;
    return add(check, "report", as_expected ? "info" : "warn");
  }
  SuiteReport take() { return std::move(report_); }

 private:
  ResultRow& add(const std::string& check, const char* kind, const char* status) {
    ResultRow row;
    row.label("suite", suite_).label("check", check).label("kind", kind).label("status", status);
    report_.rows.push_back(std::move(row));
    return report_.rows.back();
  }

  std::string suite_;
  SuiteReport report_;
};

std::int64_t as_int(std::uint64_t v) { return static_cast<std::int64_t>(v); }

// Uniform in [lo, hi]; the modulo bias is irrelevant here and, unlike
// std::uniform_int_distribution, the mapping is the same on every platform.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

Factorization random_squarefree(std::mt19937_64& rng, std::uint64_t hi) {
  for (;;) {
    auto f = arith::factor(draw(rng, 1, hi));
    if (f.squarefree()) return f;
  }
}

std::uint64_t random_prime_not_dividing(std::mt19937_64& rng, const Factorization& m,
                                        std::span<const std::uint64_t> primes) {
  for (;;) {
    const std::uint64_t p = primes[draw(rng, 0, primes.size() - 1)];
    if (!m.divisible_by(p)) return p;
  }
}

Factorization times_prime(const Factorization& m, std::uint64_t p) {
  std::vector<arith::PrimePower> f(m.factors().begin(), m.factors().end());
  f.push_back({p, 1});
  std::sort(f.begin(), f.end());
  return Factorization::from_prime_powers(std::move(f));
}

double relative_error(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// ---------------------------------------------------------------- identities

void identities_all_n(Reporter& r) {
  constexpr std::uint64_t kMax = 10'000;
  constexpr std::uint64_t kPairMax = 10'000;
  std::int64_t m1_fail = 0, bound_fail = 0, pair_fail = 0, moment_fail = 0;
  double worst_moment = 0.0;
  for (std::uint64_t n = 1; n <= kMax; ++n) {
    const DivisorLogSet d(arith::factor(n));
    const auto tau = static_cast<std::uint64_t>(d.size());
    const std::uint64_t dn = arith::delta(d);
    if (std::abs(arith::mq(d, 1) - static_cast<double>(tau)) > 1e-9 * static_cast<double>(tau)) ++m1_fail;
    const std::uint64_t lower =
        n == 1 ? 1 : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(static_cast<double>(tau) / std::log(n)));
    if (dn < lower || dn > tau) ++bound_fail;
    if (n <= kPairMax && dn * tau < arith::close_pair_count(d)) ++pair_fail;
    double prev = arith::mq(d, 1);
    for (unsigned q = 1; q <= 4; ++q) {
      const double next = arith::mq(d, q + 1);
      const double lhs = std::pow(next, 1.0 / (q + 1));
      const double rhs = 2.0 * std::pow(prev, 1.0 / q);
      worst_moment = std::max(worst_moment, lhs / rhs);
      if (lhs > rhs * (1.0 + 1e-12)) ++moment_fail;
      prev = next;
    }
  }
  const auto n_max = as_int(kMax);
  r.hard("m1_equals_tau", m1_fail == 0).value("n_max", n_max).value("failures", m1_fail);
  r.hard("delta_tau_bounds", bound_fail == 0).value("n_max", n_max).value("failures", bound_fail);
  r.hard("pair_inequality", pair_fail == 0).value("n_max", as_int(kPairMax)).value("failures", pair_fail);
  r.hard("moment_inequality", moment_fail == 0)
      .value("n_max", n_max)
      .value("q_max", std::int64_t{4})
      .value("failures", moment_fail)
      .value("worst_ratio", worst_moment);
}

void identities_recurrence(Reporter& r, std::mt19937_64& rng, std::span<const std::uint64_t> primes) {
  constexpr int kTrials = 200;
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  std::int64_t failures = 0;
  for (int i = 0; i < kTrials; ++i) {
    const auto m = random_squarefree(rng, 10'000);
    const std::uint64_t p = random_prime_not_dividing(rng, m, primes);
    const unsigned q = static_cast<unsigned>(draw(rng, 2, 3));
    const DivisorLogSet dm(m);
    const DivisorLogSet dmp(times_prime(m, p));
    const double lhs = arith::mq(dmp, q);
    const double rhs = 2.0 * arith::mq(dm, q) + arith::eq_cross(dm, p, q);
    const double err = relative_error(rhs, lhs);
    worst = std::max(worst, err);
    if (!(err <= kTol)) ++failures;
  }
  r.hard("moment_recurrence", failures == 0)
      .value("trials", std::int64_t{kTrials})
      .value("failures", failures)
      .value("max_rel_error", worst)
      .value("tolerance", kTol);
}

void identities_splitting(Reporter& r, std::mt19937_64& rng, std::span<const std::uint64_t> primes) {
  constexpr int kTrials = 100;
  constexpr double kGrid = 1e-2;
  std::int64_t failures = 0, points = 0;
  for (int i = 0; i < kTrials; ++i) {
    const auto m = random_squarefree(rng, 10'000);
    const std::uint64_t p = random_prime_not_dividing(rng, m, primes);
    const DivisorLogSet dm(m);
    const DivisorLogSet dmp(times_prime(m, p));
    const double lp = std::log(static_cast<double>(p));
    const double top = std::log(static_cast<double>(dmp.source())) + kGrid;
    for (std::int64_t k = 0;; ++k) {
      const double u = -1.0 - kGrid + static_cast<double>(k) * kGrid;
      if (u > top) break;
      ++points;
      if (arith::delta_at(dmp, u) != arith::delta_at(dm, u) + arith::delta_at(dm, u - lp)) ++failures;
    }
  }
  r.hard("delta_splitting", failures == 0)
      .value("pairs", std::int64_t{kTrials})
      .value("grid_points", points)
      .value("failures", failures);
}

SuiteReport suite_identities() {
  Reporter r("identities");
  std::mt19937_64 rng(kSeed);
  const auto pt = friable::sieve(1000);
  identities_all_n(r);
  identities_recurrence(r, rng, pt.primes());
  identities_splitting(r, rng, pt.primes());
  return r.take();
}

// ---------------------------------------------------------------- rho and xi

constexpr double kStep = 1.0 / 1024.0;

double max_error_on(const specfun::RhoTable& a, const specfun::RhoTable& ref, double from, double to) {
  // Grid points of `a`, which are also grid points of the finer `ref`.
  double worst = 0.0;
  const auto va = a.values();
  const auto vr = ref.values();
  const auto ratio = static_cast<std::size_t>(std::llround(a.step() / ref.step()));
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double v = static_cast<double>(i) * a.step();
    if (v < from || v > to || i * ratio >= vr.size()) continue;
    worst = std::max(worst, std::abs(va[i] - vr[i * ratio]));
  }
  return worst;
}

void rho_checks(Reporter& r) {
  const auto rho = specfun::rho_table(1.0, 32.0, kStep);
  const auto rho2 = specfun::rho_table(2.0, 24.0, kStep);
  const auto rho_half = specfun::rho_table(0.5, 12.0, kStep);

  const double err2 = std::abs(rho(2.0) - (1.0 - std::numbers::ln2));
  r.hard("rho_at_2", err2 <= 1e-8).value("step", kStep).value("abs_error", err2).value("tolerance", 1e-8);

  double unit_err = 0.0;
  for (int k = 1; k <= 1024; ++k) {
    const double v = k / 1024.0;
    unit_err = std::max(unit_err, std::abs(rho2(v) - v));
  }
  r.hard("rho2_unit_interval", unit_err <= 1e-10).value("abs_error", unit_err).value("tolerance", 1e-10);

  double square_err = 0.0, half_err = 0.0;
  for (int k = 1; k <= 24; ++k) {
    const double v = k / 8.0;
    square_err = std::max(square_err, std::abs(rho2(v) - specfun::rho_convolution(rho, rho, v)));
    half_err = std::max(half_err, std::abs(rho(v) - specfun::rho_convolution(rho_half, rho_half, v)));
  }
  r.hard("rho2_convolution_square", square_err <= 1e-6).value("abs_error", square_err).value("tolerance", 1e-6);
  r.hard("rho_half_convolution_square", half_err <= 1e-5).value("abs_error", half_err).value("tolerance", 1e-5);

  for (double kappa : {0.5, 1.0, 2.0}) {
    const auto ref = specfun::rho_table(kappa, 6.0, 1.0 / 8192.0);
    const double e1 = max_error_on(specfun::rho_table(kappa, 6.0, 1.0 / 256.0), ref, 2.0, 6.0);
    const double e2 = max_error_on(specfun::rho_table(kappa, 6.0, 1.0 / 512.0), ref, 2.0, 6.0);
    const double ratio = e1 / e2;
    r.hard("rho_step_halving", ratio >= 3.5 && ratio <= 4.5)
        .value("kappa", kappa)
        .value("error_h", e1)
        .value("error_h2", e2)
        .value("ratio", ratio);
  }

  double prev_gap = std::numeric_limits<double>::infinity();
  for (double v : {10.0, 20.0, 30.0}) {
    const double ratio = specfun::rho_kappa_asymptotic(1.0, v) / rho(v);
    const double gap = std::abs(ratio - 1.0);
    const bool expected = gap < prev_gap && (v != 10.0 || gap <= 0.15);
    r.report("rho_asymptotic_ratio", expected).value("kappa", 1.0).value("v", v).value("ratio", ratio);
    prev_gap = gap;
  }

  r.hard("frak_r_at_1", std::abs(specfun::frak_r(1.0, rho, rho2) - 1.0) <= 1e-12)
      .value("u", 1.0)
      .value("r", specfun::frak_r(1.0, rho, rho2));
  for (double u : {2.0, 5.0, 10.0, 20.0}) {
    const double fr = specfun::frak_r(u, rho, rho2);
    r.report("frak_r_growth").value("u", u).value("r", fr).value("log_r_over_u_log2", std::log(fr) / (u * std::numbers::ln2));
  }

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int k = 2; k <= 40; ++k) {
    const double v = k / 2.0;
    const double s = rho_half(v / 2.0);
    const double ratio = s * s * std::sqrt(v) / rho(v);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  r.report("rho_half_square_vs_rho").value("v_min", 1.0).value("v_max", 20.0).value("ratio_min", lo).value("ratio_max", hi);

  for (double y : {10.0, 100.0, 1e4}) {
    const double a = 1.0 / std::log(y);
    // v = e^s removes the 1/v singularity.
    const double integral = quadrature::adaptive_simpson(
        [&](double s) {
          const double v = std::exp(s);
          const double val = rho_half(v);
          return val * val * v;
        },
        std::log(a), 0.0, 1e-14);
    const double expected = std::log(std::log(y)) / std::numbers::pi;
    const double err = std::abs(integral - expected);
    r.hard("rho_half_square_integral", err <= 1e-10).value("y", y).value("integral", integral).value("abs_error", err);
  }
}

void g_h_checks(Reporter& r) {
  bool increasing = true, positive = true;
  double worst_identity = 0.0;
  double prev = 0.0;
  for (int k = -40; k <= 40; ++k) {
    const double t = std::pow(10.0, k / 10.0);
    const double g = specfun::g_func(t);
    positive = positive && g > 0.0;
    if (k > -40) increasing = increasing && g > prev;
    prev = g;
    const double identity = t * std::log1p(1.0 / t) - g;
    worst_identity = std::max(worst_identity, std::abs(specfun::h_func(t) - identity) / std::max(1.0, std::abs(identity)));
  }
  r.hard("g_positive_increasing", increasing && positive).value("t_min", 1e-4).value("t_max", 1e4);
  r.hard("h_identity", worst_identity <= 1e-12).value("max_rel_error", worst_identity);
  const double g1_err = std::abs(specfun::g_func(1.0) - std::log(27.0 / 16.0));
  r.hard("g_at_1", g1_err <= 1e-14).value("abs_error", g1_err);
  const double h1_err = std::abs(specfun::h_func(1.0) - std::log(32.0 / 27.0));
  r.hard("h_at_1", h1_err <= 1e-14).value("abs_error", h1_err);
  for (double t : {10.0, 100.0, 1000.0}) {
    r.report("g_large_t")
        .value("t", t)
        .value("g", specfun::g_func(t))
        .value("scaled_gap", t * t * (specfun::g_func(t) - (std::numbers::ln2 - 0.25 / t)));
  }
  for (double t : {1e-2, 1e-3, 1e-4}) {
    r.report("g_small_t")
        .value("t", t)
        .value("g", specfun::g_func(t))
        .value("scaled_gap", (specfun::g_func(t) - (t * std::log(1.0 / t) - t * (std::log(4.0) - 1.0))) / (t * t));
  }
}

void xi_checks(Reporter& r) {
  for (double t : {1.0, std::numbers::e - 1.0, 10.0, 1e3, 1e6}) {
    const double z = specfun::xi(t);
    const double residual = std::abs(std::expm1(z) - t * z);
    const double bound = 1e-12 * (1.0 + t * z);
    r.hard("xi_residual", residual <= bound).value("t", t).value("xi", z).value("residual", residual).value("bound", bound);
  }
  const double e1 = std::abs(specfun::xi(std::numbers::e - 1.0) - 1.0);
  r.hard("xi_at_e_minus_1", e1 <= 1e-12).value("abs_error", e1);

  double worst = 0.0;
  bool increasing = true;
  double prev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double t = 1.5 * std::pow(1e6 / 1.5, k / 19.0);
    const double h = 1e-4 * (t - 1.0);
    const double fd = (specfun::xi(t + h) - specfun::xi(t - h)) / (2.0 * h);
    worst = std::max(worst, relative_error(specfun::xi_prime(t), fd));
    const double z = specfun::xi(t);
    if (k > 0) increasing = increasing && z > prev;
    prev = z;
  }
  r.hard("xi_prime_vs_differences", worst <= 1e-6).value("points", std::int64_t{20}).value("max_rel_error", worst);
  r.hard("xi_increasing", increasing).value("points", std::int64_t{20});
  const double t = 1e6;
  r.report("xi_large_t").value("t", t).value("xi", specfun::xi(t)).value("log_t_plus_loglog_t", std::log(t) + std::log(std::log(t)));
}

SuiteReport suite_rho() {
  Reporter r("rho");
  rho_checks(r);
  g_h_checks(r);
  xi_checks(r);
  return r.take();
}

// ---------------------------------------------------------------- saddle

void saddle_grid(Reporter& r, const friable::PrimeTable& pt) {
  for (double y : {20.0, 50.0, 100.0, 1000.0}) {
    double prev_alpha = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 8; ++k) {
      const double x = std::pow(10.0, 4.0 + 0.5 * k);
      const auto sd = saddle::solve_alpha(x, y, pt);
      const double residual = std::abs(sd.phi_alpha - std::log(x));
      r.hard("saddle_residual", residual <= 1e-9 * std::log(x))
          .value("x", x)
          .value("y", y)
          .value("alpha", sd.alpha)
          .value("residual", residual)
          .value("bound", 1e-9 * std::log(x));
      const auto id = saddle::zeta_alpha_identity(x, y, pt);
      r.hard("zeta_alpha_identity", std::abs(id.relative_gap()) <= 1e-8)
          .value("x", x)
          .value("y", y)
          .value("alpha", id.alpha)
          .value("rel_gap", id.relative_gap());
      r.hard("alpha_decreasing_in_x", sd.alpha < prev_alpha).value("x", x).value("y", y).value("alpha", sd.alpha);
      prev_alpha = sd.alpha;
    }
  }
  for (double x : {1e4, 1e6, 1e8}) {
    double prev = 0.0;
    bool ok = true;
    for (double y : {20.0, 50.0, 100.0, 1000.0}) {
      const double a = saddle::solve_alpha(x, y, pt).alpha;
      ok = ok && a > prev;
      prev = a;
    }
    r.hard("alpha_increasing_in_y", ok).value("x", x);
  }
}

void saddle_products(Reporter& r, const friable::PrimeTable& pt) {
  double worst = 0.0;
  for (double y : {20.0, 100.0, 1000.0}) {
    for (double s : {0.3, 0.5, 1.0, 2.0}) {
      const double gap =
          std::expm1(saddle::log_zeta1(s, pt, y) - (saddle::log_zeta_sy(s, pt, y) - saddle::log_zeta_sy(2.0 * s, pt, y)));
      worst = std::max(worst, std::abs(gap));
    }
  }
  r.hard("zeta1_identity", worst <= 1e-12).value("max_rel_error", worst).value("tolerance", 1e-12);

  bool decreasing = true;
  for (double y : {20.0, 100.0, 1000.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 40; ++k) {
      const double v = saddle::phi_y(0.05 * k, pt, y);
      decreasing = decreasing && v < prev;
      prev = v;
    }
  }
  r.hard("phi_decreasing", decreasing).value("s_min", 0.05).value("s_max", 2.0);
}

void saddle_psi(Reporter& r, const friable::PrimeTable& pt) {
  const auto rho = specfun::rho_table(1.0, 8.0, kStep);
  double prev_gap = std::numeric_limits<double>::infinity();
  for (auto [x, y] : {std::pair{1e6, 1e3}, std::pair{1e8, 1e4}}) {
    const double ratio = saddle::psi_hildebrand(x, y, rho) / static_cast<double>(friable::psi_exact(x, y, pt));
    r.hard("psi_hildebrand_band", ratio >= 0.85 && ratio <= 1.15).value("x", x).value("y", y).value("ratio", ratio);
    const double gap = std::abs(ratio - 1.0);
    r.report("psi_hildebrand_drift", gap < prev_gap).value("x", x).value("y", y).value("ratio", ratio);
    prev_gap = gap;
  }
  for (auto [x, y] : {std::pair{1e6, 100.0}, std::pair{1e7, 300.0}}) {
    const double ratio =
        saddle::psi_saddle(saddle::solve_alpha(x, y, pt)) / static_cast<double>(friable::psi_exact(x, y, pt));
    r.hard("psi_saddle_band", ratio >= 0.8 && ratio <= 1.25).value("x", x).value("y", y).value("ratio", ratio);
  }
  {
    const double x = 1e4, y = 30.0;
    const double ratio =
        saddle::psi_saddle(saddle::solve_alpha(x, y, pt)) / static_cast<double>(friable::psi_exact(x, y, pt));
    r.report("psi_saddle_ratio").value("x", x).value("y", y).value("ratio", ratio);
  }
}

void saddle_shapes(Reporter& r, const friable::PrimeTable& pt) {
  const double y = 100.0;
  for (int k = 4; k <= 12; k += 2) {
    const double x = std::pow(10.0, k);
    const auto sd = saddle::solve_alpha(x, y, pt);
    const double lx = std::log(x);
    const double u = lx / std::log(y);
    r.report("beta_minus_alpha").value("x", x).value("y", y).value("u", u).value(
        "ratio", (sd.beta - sd.alpha) * lx / (u * std::numbers::ln2));
  }
  {
    const double x = 1e6;
    const auto sd = saddle::solve_alpha(x, y, pt);
    const double shape = std::log1p(y / std::log(x)) / std::log(y);
    r.report("alpha_shape").value("x", x).value("y", y).value("alpha", sd.alpha).value("ratio", sd.alpha / shape);
  }
  {
    const double x = 1e8, yy = 1e3;
    const auto sd = saddle::solve_alpha(x, yy, pt);
    const double u = std::log(x) / std::log(yy);
    const double approx = 1.0 - specfun::xi(u) / std::log(yy);
    r.report("alpha_vs_xi").value("x", x).value("y", yy).value("alpha", sd.alpha).value("deviation", sd.alpha - approx);
  }
  for (auto [x, yy] : {std::pair{1e6, 100.0}, std::pair{1e8, 1e3}, std::pair{1e10, 1e4}}) {
    const auto sd = saddle::solve_alpha(x, yy, pt);
    const double lx = std::log(x);
    const double estimate = (1.0 + lx / yy) * lx * std::log(yy);
    r.report("phi_prime_shape").value("x", x).value("y", yy).value("ratio", -sd.phi_prime_alpha / estimate);
  }
}

SuiteReport suite_saddle(const std::filesystem::path& cache_dir) {
  Reporter r("saddle");
  const auto pt = detail::primes_for(1e4, cache_dir);
  saddle_grid(r, pt);
  saddle_products(r, pt);
  saddle_psi(r, pt);
  saddle_shapes(r, pt);
  return r.take();
}

// ---------------------------------------------------------------- mean value

void meanvalue_grid(Reporter& r, const friable::PrimeTable& pt) {
  constexpr double kBandLo = 0.4, kBandHi = 2.5;
  for (double y : {7.0, 11.0, 19.0, 31.0}) {
    for (int k = 3; k <= 7; ++k) {
      const double x = std::pow(10.0, k);
      const auto sums = friable::friable_sums(x, y, pt);
      const auto fp = friable::FriablePair::make(x, y);
      const double lx = std::log(x);
      // Integer form of psi_tau / (2 psi log x) <= S <= psi_tau / psi.
      const bool upper = sums.sum_delta <= sums.sum_tau;
      const bool lower = static_cast<double>(sums.sum_tau) <= 2.0 * lx * static_cast<double>(sums.sum_delta);
      const double s = sums.mean_value();
      const double tau_mean = static_cast<double>(sums.sum_tau) / static_cast<double>(sums.psi);
      r.hard("sandwich", upper && lower)
          .value("x", x)
          .value("y", y)
          .value("lower", tau_mean / (2.0 * lx))
          .value("S", s)
          .value("upper", tau_mean);
      const double stat = std::log(s) / (specfun::g_func(fp.lambda) * fp.u);
      const double l2 = std::log(lx);
      const bool feasible = l2 > 1.0 && std::log(y) <= lx / (2.0 * l2 * std::log(l2));
      r.hard("mean_value_band", stat >= kBandLo && stat <= kBandHi)
          .label("feasible", feasible ? "yes" : "no")
          .value("x", x)
          .value("y", y)
          .value("u", fp.u)
          .value("lambda", fp.lambda)
          .value("statistic", stat)
          .value("band_lo", kBandLo)
          .value("band_hi", kBandHi);
    }
  }
}

void meanvalue_lower_shape(Reporter& r, const friable::PrimeTable& pt) {
  const auto rho = specfun::rho_table(1.0, 4.0, kStep);
  const auto rho2 = specfun::rho_table(2.0, 4.0, kStep);
  constexpr double kEps = 0.1;
  double worst = std::numeric_limits<double>::infinity();
  for (double y : {300.0, 1000.0}) {
    for (int k = 4; k <= 6; ++k) {
      const double x = std::pow(10.0, k);
      const double l2 = std::log(std::log(x));
      const bool in_h = std::log(y) >= std::pow(l2, 5.0 / 3.0 + kEps) && y <= x;
      const double u = std::log(x) / std::log(y);
      const double ratio = friable::mean_value_S(x, y, pt) / (std::log(std::log(y)) + specfun::frak_r(u, rho, rho2));
      if (in_h) worst = std::min(worst, ratio);
      r.report("lower_bound_shape").label("in_H", in_h ? "yes" : "no").value("x", x).value("y", y).value("u", u).value(
          "ratio", ratio);
    }
  }
  r.report("lower_bound_constant", worst > 0.0).value("epsilon", kEps).value("empirical_constant", worst);
}

void meanvalue_full_sums(Reporter& r, const std::filesystem::path& cache_dir) {
  const auto pt = detail::primes_for(1e5, cache_dir);
  for (int k = 3; k <= 5; ++k) {
    const double n = std::pow(10.0, k);
    const double mean = friable::mean_value_S(n, n, pt);
    const double l2 = std::log(std::log(n));
    r.report("delta_mean_all").value("N", n).value("D_over_N", mean).value("over_loglog", mean / l2).value(
        "over_loglog_3_2", mean / std::pow(l2, 1.5));
  }
}

SuiteReport suite_meanvalue(const std::filesystem::path& cache_dir) {
  Reporter r("meanvalue");
  const auto pt = detail::primes_for(1000.0, cache_dir);
  meanvalue_grid(r, pt);
  meanvalue_lower_shape(r, pt);
  meanvalue_full_sums(r, cache_dir);
  return r.take();
}

// ---------------------------------------------------------------- lemma 2.1

SuiteReport suite_lemma21(const std::filesystem::path& cache_dir) {
  Reporter r("lemma21");
  const auto pt = detail::primes_for(100.0, cache_dir);
  const auto rho_half = specfun::rho_table(0.5, 6.0, kStep);

  const auto q1 = friable::lemma21_quantities(Factorization{}, 100.0);
  r.hard("lemma21_trivial_d", q1.q_d == 1.0 && q1.w_d == 1.0 && q1.theta_d == 0.0).value("q_d", q1.q_d);
  const auto q2 = friable::lemma21_quantities(arith::factor(2), 100.0);
  r.hard("lemma21_q_2", std::abs(q2.q_d - 0.75) <= 1e-15).value("q_d", q2.q_d);

  for (double y : {50.0, 100.0}) {
    for (std::uint64_t dv : {1, 2, 6, 30}) {
      const auto d = arith::factor(dv);
      const auto q = friable::lemma21_quantities(d, y);
      std::vector<double> ratios;
      for (int k = 4; k <= 7; ++k) {
        const double x = std::pow(10.0, k);
        const double u = std::log(x) / std::log(y);
        const double td = friable::t_d_sum(x, y, d, pt);
        const double ratio = td * std::sqrt(std::log(y)) / (q.C * x * rho_half(u) * q.q_d);
        ratios.push_back(ratio);
        r.report("lemma21_ratio").value("x", x).value("y", y).value("d", as_int(dv)).value("ratio", ratio);
        if (dv != 1) {
          const double t1 = friable::t_d_sum(x, y, Factorization{}, pt);
          r.hard("t_d_dominated", t1 - td >= 0.0).value("x", x).value("y", y).value("d", as_int(dv)).value(
              "difference", t1 - td);
        }
      }
      bool monotone_up = true, monotone_down = true;
      for (std::size_t i = 1; i < ratios.size(); ++i) {
        monotone_up = monotone_up && ratios[i] >= ratios[i - 1];
        monotone_down = monotone_down && ratios[i] <= ratios[i - 1];
      }
      const double last = ratios.back();
      const bool toward_one = (monotone_up && last <= 1.3) || (monotone_down && last >= 0.7);
      const bool within = last >= 0.7 && last <= 1.3;
      r.report("lemma21_drift", (monotone_up || monotone_down) && toward_one && within)
          .value("y", y)
          .value("d", as_int(dv))
          .value("first", ratios.front())
          .value("last", last);
    }
  }
  {
    const double x = 1e5, y = 50.0;
    const double direct = friable::psi_weighted(
        x, y, [](const Factorization& f) { return std::ldexp(1.0, -static_cast<int>(f.big_omega())); }, pt);
    const double td = friable::t_d_sum(x, y, Factorization{}, pt);
    r.hard("t_1_weighted_sum", relative_error(td, direct) <= 1e-12).value("x", x).value("y", y).value("t_1", td);
  }
  return r.take();
}

void append(SuiteReport& into, SuiteReport&& from) {
  into.failures += from.failures;
  into.warnings += from.warnings;
  for (auto& row : from.rows) into.rows.push_back(std::move(row));
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "identities") return Suite::kIdentities;
  if (name == "rho") return Suite::kRho;
  if (name == "saddle") return Suite::kSaddle;
  if (name == "meanvalue") return Suite::kMeanValue;
  if (name == "lemma21") return Suite::kLemma21;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

SuiteReport verify_suite(Suite suite, const std::filesystem::path& cache_dir) {
  switch (suite) {
    case Suite::kIdentities: return suite_identities();
    case Suite::kRho: return suite_rho();
    case Suite::kSaddle: return suite_saddle(cache_dir);
    case Suite::kMeanValue: return suite_meanvalue(cache_dir);
    case Suite::kLemma21: return suite_lemma21(cache_dir);
    case Suite::kAll: {
      SuiteReport all;
      for (Suite s : {Suite::kIdentities, Suite::kRho, Suite::kSaddle, Suite::kMeanValue, Suite::kLemma21}) {
        append(all, verify_suite(s, cache_dir));
      }
      return all;
    }
  }
  return {};
}

}  // namespace fdelta::cli
