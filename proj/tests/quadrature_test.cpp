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

#include <cmath>

#include "fdelta/error.hpp"
#include "fdelta/quadrature.hpp"

namespace fdelta::quadrature {
namespace {

TEST(AdaptiveSimpson, Polynomials) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 1e-12), 4.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double x) { return x * x * x * x; }, -1.0, 1.0, 1e-12), 0.4, 1e-12);
  EXPECT_EQ(adaptive_simpson([](double) { return 1.0; }, 3.0, 3.0, 1e-12), 0.0);
}

TEST(AdaptiveSimpson, Exponential) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 5.0, 1e-11), std::expm1(5.0), 1e-10);
  EXPECT_NEAR(adaptive_simpson_panels([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-12, 16),
              -std::expm1(-40.0), 1e-11);
}

TEST(AdaptiveSimpson, ThrowsWhenDepthIsExhausted) {
  EXPECT_THROW(adaptive_simpson([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-14, 5),
               ConvergenceError);
}

TEST(GaussLegendre8, ExactToDegreeFifteen) {
  for (int k = 0; k <= 15; ++k) {
    const double got = gauss_legendre8([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
    EXPECT_NEAR(got, 1.0 / (k + 1), 1e-15) << k;
  }
  const double deg16 = gauss_legendre8([](double x) { return std::pow(x, 16); }, 0.0, 1.0);
  EXPECT_GT(std::abs(deg16 - 1.0 / 17.0), 1e-16);
}

}  // namespace
}  // namespace fdelta::quadrature
