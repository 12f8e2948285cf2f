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

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace fdelta::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// The positive root of e^xi = 1 + t xi for t > 1, and xi(1) = 0. Throws
// DomainError for t < 1.
double xi(double t);

// xi'(t) = xi / (1 + t xi - t), t > 1.
double xi_prime(double t);

// Integral of xi over [1, t] by adaptive quadrature (error about
// max(1e-12, 1e-13 t xi(t))).
double xi_integral(double t);

// rho_kappa sampled on values[i] = rho_kappa(i * step), i * step <= v_max.
// values[0] holds the limit at 0+ (infinite for kappa < 1).
class RhoTable {
 public:
  double kappa() const { return kappa_; }
  double step() const { return step_; }
  double v_max() const { return v_max_; }
  std::span<const double> values() const { return values_; }

  // rho_kappa(v) for 0 <= v <= v_max; 0 for v < 0. Closed form on (0, 2],
  // cubic interpolation of the samples beyond. Throws DomainError past v_max.
  double operator()(double v) const;

  // Header line "kappa,step,v_max", the three values, then rows "v,value".
  // 17 significant digits, so the round trip is lossless.
  void write_csv(std::ostream& out) const;
  static RhoTable read_csv(std::istream& in);

  friend RhoTable rho_table(double kappa, double v_max, double step);

 private:
  RhoTable(double kappa, double step, double v_max, std::vector<double> values)
      : kappa_(kappa), step_(step), v_max_(v_max), values_(std::move(values)) {}

  double kappa_;
  double step_;
  double v_max_;
  std::vector<double> values_;
};

// Closed forms on (0, 2]; beyond, steps v rho(v) = kappa int_{v-1}^v rho(t) dt
// forward, with Gauss-Legendre cells on [1, 2] and trapezoid cells past 2.
// The scheme is second order in step.
// Requires kappa > 0, v_max >= 1 and step = 1/N with step <= 2^-8.
RhoTable rho_table(double kappa, double v_max, double step);

// rho_kappa on (0, 2] in closed form (power series on [1, 2]).
double rho_closed_form(double kappa, double v);

// sqrt(xi'(v/kappa) / (2 pi kappa)) exp(kappa gamma - kappa int_1^{v/kappa} xi).
double rho_kappa_asymptotic(double kappa, double v);

// r(u) = rho_2(u) / (sqrt(u) rho(u)); rho1 and rho2 are the kappa = 1 and 2 tables.
double frak_r(double u, const RhoTable& rho1, const RhoTable& rho2);

// (f * g)(v) = int_0^v f(t) g(v - t) dt for two tables, splitting at the
// kinks and substituting away the t^(kappa-1) endpoint singularities.
double rho_convolution(const RhoTable& f, const RhoTable& g, double v, double tol = 1e-10);

// log((1+2t)^(1+2t) / ((1+t)^(1+t) (4t)^t)), t > 0.
double g_func(double t);

// t log 4 - (1+2t) log((1+2t)/(1+t)), t > 0.
double h_func(double t);

}  // namespace fdelta::specfun
