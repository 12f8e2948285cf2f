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

#include <gtest/gtest.h>

#include "fdelta/error.hpp"
#include "fdelta/step_function.hpp"

namespace fdelta {
namespace {

TEST(StepFunction, EvaluatesOnHalfOpenIntervals) {
  const StepFunction f({0.0, 1.0, 3.0}, {2, 5});
  EXPECT_EQ(f(-0.1), 0);
  EXPECT_EQ(f(0.0), 2);
  EXPECT_EQ(f(0.999), 2);
  EXPECT_EQ(f(1.0), 5);
  EXPECT_EQ(f(3.0), 0);
  EXPECT_EQ(f.max_value(), 5);
}

TEST(StepFunction, Integrals) {
  const StepFunction f({0.0, 1.0, 3.0}, {2, 5});
  EXPECT_DOUBLE_EQ(f.integral(), 12.0);
  EXPECT_DOUBLE_EQ(f.integral_power(2), 54.0);
  EXPECT_DOUBLE_EQ(f.integral_power(3), 258.0);
  EXPECT_EQ(StepFunction().integral(), 0.0);
}

TEST(StepFunction, Validation) {
  EXPECT_THROW(StepFunction({0.0, 1.0}, {1, 2}), InvalidArgument);
  EXPECT_THROW(StepFunction({1.0, 0.0}, {1}), InvalidArgument);
  EXPECT_THROW(StepFunction({0.0, 0.0}, {1}), InvalidArgument);
  EXPECT_THROW(StepFunction({0.0, 1.0}, {-1}), InvalidArgument);
  EXPECT_NO_THROW(StepFunction({}, {}));
}

TEST(StepFunction, Shifted) {
  const StepFunction f({0.0, 1.0}, {3});
  const auto g = f.shifted(2.5);
  EXPECT_EQ(g(2.5), 3);
  EXPECT_EQ(g(0.5), 0);
  EXPECT_DOUBLE_EQ(g.integral(), 3.0);
}

TEST(IntegratePair, ProductOfOverlappingBoxes) {
  const StepFunction a({0.0, 2.0}, {1});
  const StepFunction b({1.0, 4.0}, {3});
  const double overlap = integrate_pair(a, b, [](std::int64_t x, std::int64_t y) { return double(x * y); });
  EXPECT_DOUBLE_EQ(overlap, 3.0);
  const double sum = integrate_pair(a, b, [](std::int64_t x, std::int64_t y) { return double(x + y); });
  EXPECT_DOUBLE_EQ(sum, a.integral() + b.integral());
}

TEST(IntegratePair, DisjointSupports) {
  const StepFunction a({0.0, 1.0}, {1});
  const StepFunction b({5.0, 6.0}, {1});
  EXPECT_EQ(integrate_pair(a, b, [](std::int64_t x, std::int64_t y) { return double(x * y); }), 0.0);
}

}  // namespace
}  // namespace fdelta
