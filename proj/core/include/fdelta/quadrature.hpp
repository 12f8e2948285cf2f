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

#include <array>
#include <cmath>

#include "fdelta/error.hpp"

namespace fdelta::quadrature {

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                    int depth, int& evaluations) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  evaluations += 2;
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw ConvergenceError("adaptive Simpson: recursion depth exhausted");
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evaluations) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, evaluations);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction; `tol` is absolute.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 50) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  int evaluations = 3;
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth, evaluations);
}

// Adaptive Simpson over [a, b] split into `pieces` equal panels, each with
// tolerance tol / pieces. Useful when the integrand is oscillation-free but
// varies on several scales.
template <typename F>
double adaptive_simpson_panels(F&& f, double a, double b, double tol, int pieces) {
  double sum = 0.0;
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == pieces) ? b : lo + h;
    sum += adaptive_simpson(f, lo, hi, tol / pieces);
  }
  return sum;
}

// 8-point Gauss-Legendre on [a, b].
template <typename F>
double gauss_legendre8(F&& f, double a, double b) {
  static constexpr std::array<double, 4> kNodes = {0.1834346424956498049394761, 0.5255324099163289858177390,
                                                   0.7966664774136267395915539, 0.9602898564975362316835609};
  static constexpr std::array<double, 4> kWeights = {0.3626837833783619829651504, 0.3137066458778872873379622,
                                                     0.2223810344533744705443560, 0.1012285362903762591525314};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    sum += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
  }
  return half * sum;
}

}  // namespace fdelta::quadrature
