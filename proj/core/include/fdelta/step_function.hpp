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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fdelta {

// Piecewise-constant, compactly supported function with nonnegative integer
// heights. values()[i] holds on the half-open interval
// [breakpoints()[i], breakpoints()[i + 1]); the function is 0 elsewhere.
class StepFunction {
 public:
  StepFunction() = default;

  // Throws InvalidArgument unless breakpoints are strictly increasing,
  // values.size() + 1 == breakpoints.size() (or both empty) and values >= 0.
  StepFunction(std::vector<double> breakpoints, std::vector<std::int64_t> values);

  std::int64_t operator()(double u) const;

  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const std::int64_t> values() const { return values_; }
  bool empty() const { return values_.empty(); }

  std::int64_t max_value() const;
  double integral() const;
  // Integral of the q-th power, i.e. sum of height^q * length.
  double integral_power(unsigned q) const;

  // u -> f(u - offset).
  StepFunction shifted(double offset) const;

 private:
  std::vector<double> breakpoints_;
  std::vector<std::int64_t> values_;
};

// Integral over R of kernel(a(u), b(u)) for two step functions. The kernel is
// only evaluated on the common refinement of both partitions; it must vanish
// at (0, 0).
template <typename Kernel>
double integrate_pair(const StepFunction& a, const StepFunction& b, Kernel&& kernel) {
  const auto ba = a.breakpoints();
  const auto bb = b.breakpoints();
  const auto va = a.values();
  const auto vb = b.values();
  // Index of the interval currently open in each function; -1 before the
  // first breakpoint, size() after the last.
  std::ptrdiff_t ia = -1, ib = -1;
  std::size_t pa = 0, pb = 0;
  double prev = 0.0;
  bool started = false;
  double sum = 0.0, comp = 0.0;
  auto height = [](std::span<const std::int64_t> v, std::ptrdiff_t i) -> std::int64_t {
    return (i >= 0 && static_cast<std::size_t>(i) < v.size()) ? v[static_cast<std::size_t>(i)] : 0;
  };
  while (pa < ba.size() || pb < bb.size()) {
    double next;
    bool take_a;
    if (pb >= bb.size()) {
      take_a = true;
    } else if (pa >= ba.size()) {
      take_a = false;
    } else {
      take_a = ba[pa] <= bb[pb];
    }
    next = take_a ? ba[pa] : bb[pb];
    if (started && next > prev) {
      const double term = kernel(height(va, ia), height(vb, ib)) * (next - prev);
      // Neumaier summation.
      const double t = sum + term;
      comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    if (take_a) {
      ++ia;
      ++pa;
    } else {
      ++ib;
      ++pb;
    }
    prev = next;
    started = true;
  }
  return sum + comp;
}

}  // namespace fdelta
