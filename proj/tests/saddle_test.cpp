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
#include <numbers>

#include "fdelta/error.hpp"
#include "fdelta/friable.hpp"
#include "fdelta/saddle.hpp"

namespace fdelta::saddle {
namespace {

const PrimeTable& primes() {
  static const PrimeTable pt = friable::sieve(200000);
  return pt;
}

TEST(Zeta, Examples) {
  const auto& pt = primes();
  EXPECT_NEAR(zeta_sy(50.0, pt, 100.0), 1.0, 1e-14);
  EXPECT_NEAR(zeta_sy(1.0, pt, 3.0), 3.0, 1e-14);
  EXPECT_NEAR(log_zeta_sy(2.0, pt, 2.0), std::log(4.0 / 3.0), 1e-15);
  EXPECT_THROW(zeta_sy(0.0, pt, 10.0), DomainError);
  EXPECT_THROW(zeta_sy(1.0, pt, 1e6), InvalidArgument);
}

TEST(Zeta, MertensProduct) {
  const auto& pt = primes();
  double prev_gap = 1.0;
  for (double y : {1e3, 1e4, 1e5}) {
    const double ratio = zeta_sy(1.0, pt, y) / (std::exp(specfun::kEulerGamma) * std::log(y));
    const double gap = std::abs(ratio - 1.0);
    EXPECT_LT(gap, 0.02) << y;
    EXPECT_LT(gap, prev_gap) << y;
    prev_gap = gap;
  }
}

TEST(Phi, Examples) {
  const auto& pt = primes();
  EXPECT_NEAR(phi_y(1.0, pt, 2.0), std::numbers::ln2, 1e-15);
  EXPECT_NEAR(phi_y(1.0, pt, 3.0), std::numbers::ln2 + std::log(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(phi_y_prime(1.0, pt, 2.0), -2.0 * std::numbers::ln2 * std::numbers::ln2, 1e-15);
}

TEST(Phi, MatchesDerivativesOfLogZeta) {
  const auto& pt = primes();
  const double h = 1e-5;
  const double s = 0.7, y = 100.0;
  const double fd = -(log_zeta_sy(s + h, pt, y) - log_zeta_sy(s - h, pt, y)) / (2.0 * h);
  EXPECT_NEAR(phi_y(s, pt, y) / fd, 1.0, 1e-8);
  const double s2 = 0.8;
  const double fd2 = (phi_y(s2 + h, pt, y) - phi_y(s2 - h, pt, y)) / (2.0 * h);
  EXPECT_NEAR(phi_y_prime(s2, pt, y) / fd2, 1.0, 1e-8);
}

TEST(Zeta1, ExamplesAndQuotientIdentity) {
  const auto& pt = primes();
  EXPECT_NEAR(zeta1(1.0, pt, 2.0), 1.5, 1e-15);
  EXPECT_NEAR(zeta1(1.0, pt, 3.0), 2.0, 1e-15);
  for (double s : {0.3, 0.6, 1.0, 1.7}) {
    for (double y : {10.0, 1000.0}) {
      EXPECT_NEAR(log_zeta1(s, pt, y), log_zeta_sy(s, pt, y) - log_zeta_sy(2.0 * s, pt, y), 1e-12);
    }
  }
}

TEST(SolveAlpha, Residual) {
  const auto& pt = primes();
  for (double y : {20.0, 100.0, 1000.0}) {
    for (double x : {y, 1e4, 1e8, 1e20}) {
      if (x < y) continue;
      const auto sd = solve_alpha(x, y, pt);
      EXPECT_NEAR(sd.phi_alpha, std::log(x), 1e-10 * std::log(x)) << x << " " << y;
      EXPECT_GT(sd.alpha, 0.0);
      EXPECT_LT(sd.phi_prime_alpha, 0.0);
      EXPECT_GT(sd.beta, sd.alpha);
      EXPECT_NEAR(sd.beta, saddle_exponent(0.5 * std::log(x), pt, y), 1e-14);
    }
  }
  EXPECT_THROW(solve_alpha(10.0, 100.0, pt), DomainError);
  EXPECT_THROW(solve_alpha(100.0, 1.5, pt), DomainError);
}

TEST(SolveAlpha, MonotoneInXAndY) {
  const auto& pt = primes();
  double prev = 2.0;
  for (double x = 1e4; x < 1e30; x *= 10.0) {
    const double a = solve_alpha(x, 50.0, pt).alpha;
    EXPECT_LT(a, prev);
    prev = a;
  }
  prev = 0.0;
  for (double y : {10.0, 30.0, 100.0, 1000.0, 10000.0}) {
    const double a = solve_alpha(1e8, y, pt).alpha;
    EXPECT_GT(a, prev);
    prev = a;
  }
}

TEST(PsiSaddle, BandAgainstExactCounts) {
  const auto& pt = primes();
  double prev = 0.0;
  for (double x : {1e5, 1e6, 1e7}) {
    const double approx = psi_saddle(solve_alpha(x, 100.0, pt));
    const double exact = static_cast<double>(friable::psi_exact(x, 100.0, pt));
    EXPECT_GT(approx, prev);
    EXPECT_NEAR(approx / exact, 1.0, 0.25) << x;
    prev = approx;
  }
}

TEST(PsiHildebrand, Examples) {
  const auto rho = specfun::rho_table(1.0, 8.0, 1.0 / 1024.0);
  EXPECT_DOUBLE_EQ(psi_hildebrand(50.0, 100.0, rho), 50.0);
  EXPECT_NEAR(psi_hildebrand(1e6, 1e3, rho), 1e6 * (1.0 - std::numbers::ln2), 1e-6);
  EXPECT_THROW(psi_hildebrand(1e30, 2.0, rho), DomainError);
  const auto rho2 = specfun::rho_table(2.0, 8.0, 1.0 / 1024.0);
  EXPECT_THROW(psi_hildebrand(1e6, 1e3, rho2), InvalidArgument);
}

TEST(ZetaAlphaIdentity, HoldsInLogForm) {
  const auto& pt = primes();
  for (auto [x, y] : {std::pair{1e10, 50.0}, std::pair{1e6, 20.0}, std::pair{1e20, 1000.0}}) {
    const auto id = zeta_alpha_identity(x, y, pt);
    EXPECT_LE(std::abs(id.relative_gap()), 1e-8) << x << " " << y;
    EXPECT_NEAR(id.alpha, solve_alpha(x, y, pt).alpha, 1e-14);
  }
}

TEST(ZetaAlphaIdentity, AlphaOneIsTrivial) {
  const auto& pt = primes();
  const double y = 100.0;
  const double x = std::exp(phi_y(1.0, pt, y));
  const auto id = zeta_alpha_identity(x, y, pt);
  EXPECT_NEAR(id.alpha, 1.0, 1e-12);
  EXPECT_NEAR(id.lhs, id.rhs, 1e-10);
}

}  // namespace
}  // namespace fdelta::saddle
