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

#include "fdelta/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fdelta/error.hpp"

namespace fdelta {
namespace {

class NeumaierSum {
 public:
  void add(double term) {
    const double t = sum_ + term;
    comp_ += (std::abs(sum_) >= std::abs(term)) ? (sum_ - t) + term : (term - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<std::int64_t> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() && values_.empty()) return;
  if (values_.size() + 1 != breakpoints_.size()) {
    throw InvalidArgument("StepFunction: expected " + std::to_string(breakpoints_.size() - 1) +
                          " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw InvalidArgument("StepFunction: breakpoints must be strictly increasing");
    }
  }
  if (std::any_of(values_.begin(), values_.end(), [](std::int64_t v) { return v < 0; })) {
    throw InvalidArgument("StepFunction: negative height");
  }
}

std::int64_t StepFunction::operator()(double u) const {
  if (values_.empty()) return 0;
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), u);
  if (it == breakpoints_.begin() || it == breakpoints_.end()) return 0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

std::int64_t StepFunction::max_value() const {
  if (values_.empty()) return 0;
  return *std::max_element(values_.begin(), values_.end());
}

double StepFunction::integral() const { return integral_power(1); }

double StepFunction::integral_power(unsigned q) const {
  NeumaierSum acc;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) continue;
    const double h = static_cast<double>(values_[i]);
    double hq = 1.0;
    for (unsigned k = 0; k < q; ++k) hq *= h;
    acc.add(hq * (breakpoints_[i + 1] - breakpoints_[i]));
  }
  return acc.value();
}

StepFunction StepFunction::shifted(double offset) const {
  std::vector<double> bp(breakpoints_);
  for (double& b : bp) b += offset;
  // Rounding may collapse adjacent breakpoints; the resulting zero-length
  // intervals are harmless, so the invariant check is bypassed.
  StepFunction out;
  out.breakpoints_ = std::move(bp);
  out.values_ = values_;
  return out;
}

}  // namespace fdelta
