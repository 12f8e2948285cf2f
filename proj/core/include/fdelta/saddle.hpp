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

#include <cmath>

#include "fdelta/friable.hpp"
#include "fdelta/specfun.hpp"

namespace fdelta::saddle {

using friable::PrimeTable;

// Partial Euler products over p <= y and their logarithmic derivatives. All
// require s > 0 and pt.covers(y); DomainError otherwise.
double log_zeta_sy(double s, const PrimeTable& pt, double y);
double zeta_sy(double s, const PrimeTable& pt, double y);
// phi_y(s) = -zeta'/zeta = sum_{p<=y} log p / (p^s - 1).
double phi_y(double s, const PrimeTable& pt, double y);
// phi_y'(s) = -sum_{p<=y} (log p)^2 p^s / (p^s - 1)^2.
double phi_y_prime(double s, const PrimeTable& pt, double y);
// zeta_1(s, y) = prod_{p<=y} (1 + p^-s).
double log_zeta1(double s, const PrimeTable& pt, double y);
double zeta1(double s, const PrimeTable& pt, double y);

// The root of phi_y(s) = log_x, for any log_x > 0.
double saddle_exponent(double log_x, const PrimeTable& pt, double y);

struct SaddleData {
  double x;
  double y;
  double alpha;            // phi_y(alpha) = log x
  double beta;             // alpha(sqrt x, y)
  double log_zeta_alpha_y;
  double zeta_alpha_y;     // may be +inf when the product overflows a double
  double phi_alpha;
  double phi_prime_alpha;  // < 0
};

// Requires x >= y >= 2.
SaddleData solve_alpha(double x, double y, const PrimeTable& pt);

// x^alpha zeta(alpha, y) / (alpha sqrt(2 pi |phi_y'(alpha)|)), main term only.
double psi_saddle(const SaddleData& sd);

// x rho(u), main term only.
double psi_hildebrand(double x, double y, const specfun::RhoTable& rho);

struct ZetaAlphaIdentity {
  double alpha;
  double lhs;  // log zeta(alpha, y), from the product
  double rhs;  // log zeta(1, y) + int_alpha^1 phi_y, by quadrature

  // zeta(alpha, y) / (zeta(1, y) exp(int phi_y)) - 1.
  double relative_gap() const { return std::expm1(lhs - rhs); }
};

// Both sides of zeta(alpha, y) = zeta(1, y) exp(int_alpha^1 phi_y(s) ds), in
// log form; |lhs - rhs| is |log(lhs'/rhs')| for the exponentiated sides.
ZetaAlphaIdentity zeta_alpha_identity(double x, double y, const PrimeTable& pt);

}  // namespace fdelta::saddle
