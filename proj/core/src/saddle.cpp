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

#include "fdelta/saddle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fdelta/error.hpp"
#include "fdelta/quadrature.hpp"

namespace fdelta::saddle {
namespace {

std::span<const std::uint64_t> checked_primes(double s, const PrimeTable& pt, double y) {
  if (!(s > 0.0)) throw DomainError("Euler product: s must be > 0, got " + std::to_string(s));
  if (!(y >= 2.0)) throw DomainError("Euler product: y must be >= 2");
  if (!pt.covers(y)) throw InvalidArgument("prime table does not cover y = " + std::to_string(y));
  return pt.primes_up_to(y);
}

}  // namespace

double log_zeta_sy(double s, const PrimeTable& pt, double y) {
  double sum = 0.0;
  for (std::uint64_t p : checked_primes(s, pt, y)) {
    // -log(1 - p^-s) with 1 - p^-s = -expm1(-s log p), exact for small s.
    sum -= std::log(-std::expm1(-s * std::log(static_cast<double>(p))));
  }
  return sum;
}

double zeta_sy(double s, const PrimeTable& pt, double y) { return std::exp(log_zeta_sy(s, pt, y)); }

double phi_y(double s, const PrimeTable& pt, double y) {
  double sum = 0.0;
  for (std::uint64_t p : checked_primes(s, pt, y)) {
    const double lp = std::log(static_cast<double>(p));
    sum += lp / std::expm1(s * lp);
  }
  return sum;
}

double phi_y_prime(double s, const PrimeTable& pt, double y) {
  double sum = 0.0;
  for (std::uint64_t p : checked_primes(s, pt, y)) {
    const double lp = std::log(static_cast<double>(p));
    // p^s / (p^s - 1)^2 = p^-s / (1 - p^-s)^2
    const double inv = std::exp(-s * lp);
    const double den = -std::expm1(-s * lp);
    sum += lp * lp * inv / (den * den);
  }
  return -sum;
}

double log_zeta1(double s, const PrimeTable& pt, double y) {
  double sum = 0.0;
  for (std::uint64_t p : checked_primes(s, pt, y)) sum += std::log1p(std::exp(-s * std::log(static_cast<double>(p))));
  return sum;
}

double zeta1(double s, const PrimeTable& pt, double y) { return std::exp(log_zeta1(s, pt, y)); }

double saddle_exponent(double log_x, const PrimeTable& pt, double y) {
  if (!(log_x > 0.0)) throw DomainError("saddle_exponent: requires x > 1");
  // phi_y is strictly decreasing from +inf (s -> 0) to 0 (s -> inf).
  double lo = 1.0, hi = 1.0;
  while (phi_y(lo, pt, y) <= log_x) {
    lo *= 0.5;
    if (lo < 1e-300) throw ConvergenceError("saddle_exponent: no lower bracket");
  }
  while (phi_y(hi, pt, y) > log_x) {
    hi *= 2.0;
    if (hi > 1e6) throw ConvergenceError("saddle_exponent: no upper bracket");
  }
  double s = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double f = phi_y(s, pt, y) - log_x;
    if (std::abs(f) <= 1e-13 * log_x) return s;
    if (f > 0) {
      lo = s;
    } else {
      hi = s;
    }
    double next = s - f / phi_y_prime(s, pt, y);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * hi) return next;
    s = next;
  }
  throw ConvergenceError("saddle_exponent: no convergence after 200 iterations");
}

SaddleData solve_alpha(double x, double y, const PrimeTable& pt) {
  if (!(y >= 2.0)) throw DomainError("solve_alpha: requires y >= 2");
  if (!(x >= y)) throw DomainError("solve_alpha: requires x >= y");
  const double log_x = std::log(x);
  SaddleData sd{};
  sd.x = x;
  sd.y = y;
  sd.alpha = saddle_exponent(log_x, pt, y);
  sd.beta = saddle_exponent(0.5 * log_x, pt, y);
  sd.log_zeta_alpha_y = log_zeta_sy(sd.alpha, pt, y);
  sd.zeta_alpha_y = std::exp(sd.log_zeta_alpha_y);
  sd.phi_alpha = phi_y(sd.alpha, pt, y);
  sd.phi_prime_alpha = phi_y_prime(sd.alpha, pt, y);
  return sd;
}

double psi_saddle(const SaddleData& sd) {
  const double log_psi = sd.alpha * std::log(sd.x) + sd.log_zeta_alpha_y - std::log(sd.alpha) -
                         0.5 * std::log(2.0 * std::numbers::pi * std::abs(sd.phi_prime_alpha));
  return std::exp(log_psi);
}

double psi_hildebrand(double x, double y, const specfun::RhoTable& rho) {
  if (rho.kappa() != 1.0) throw InvalidArgument("psi_hildebrand: expects the kappa = 1 table");
  if (!(x >= 1.0) || !(y >= 2.0)) throw DomainError("psi_hildebrand: requires x >= 1, y >= 2");
  const double u = std::log(x) / std::log(y);
  if (u > rho.v_max()) throw DomainError("psi_hildebrand: u beyond the rho table range");
  return x * rho(u);
}

ZetaAlphaIdentity zeta_alpha_identity(double x, double y, const PrimeTable& pt) {
  if (!(x > 1.0)) throw DomainError("zeta_alpha_identity: requires x > 1");
  const double alpha = saddle_exponent(std::log(x), pt, y);
  ZetaAlphaIdentity id{};
  id.alpha = alpha;
  id.lhs = log_zeta_sy(alpha, pt, y);
  const auto phi = [&](double s) { return phi_y(s, pt, y); };
  // Oriented integral; 16 panels since phi_y varies fastest near small s.
  const double integral = alpha <= 1.0 ? quadrature::adaptive_simpson_panels(phi, alpha, 1.0, 1e-11, 16)
                                        : -quadrature::adaptive_simpson_panels(phi, 1.0, alpha, 1e-11, 16);
  id.rhs = log_zeta_sy(1.0, pt, y) + integral;
  return id;
}

}  // namespace fdelta::saddle
