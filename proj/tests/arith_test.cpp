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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "fdelta/arith.hpp"
#include "fdelta/error.hpp"

namespace fdelta::arith {
namespace {

std::vector<std::uint64_t> brute_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Windows whose right end sits on a divisor d_j: count d in (d_j / e, d_j].
std::uint64_t brute_delta(std::uint64_t n) {
  const auto div = brute_divisors(n);
  const long double e = std::numbers::e_v<long double>;
  std::uint64_t best = 0;
  for (std::uint64_t dj : div) {
    std::uint64_t c = 0;
    for (std::uint64_t d : div) {
      if (static_cast<long double>(d) * e > static_cast<long double>(dj) && d <= dj) ++c;
    }
    best = std::max(best, c);
  }
  return best;
}

// Direct count of e^u < d <= e^(u+1).
std::uint64_t brute_delta_at(std::uint64_t n, double u) {
  std::uint64_t c = 0;
  for (std::uint64_t d : brute_divisors(n)) {
    const double l = std::log(static_cast<double>(d));
    if (u < l && l <= u + 1.0) ++c;
  }
  return c;
}

// Integral of Delta(n, .)^q from the constancy intervals, found by sorting
// every log d and log d - 1.
double brute_mq(std::uint64_t n, unsigned q) {
  std::vector<double> cuts;
  for (std::uint64_t d : brute_divisors(n)) {
    const double l = std::log(static_cast<double>(d));
    cuts.push_back(l);
    cuts.push_back(l - 1.0);
  }
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    sum += std::pow(static_cast<double>(brute_delta_at(n, 0.5 * (cuts[i] + cuts[i + 1]))), q) * len;
  }
  return sum;
}

double binomial(unsigned q, unsigned j) {
  double c = 1.0;
  for (unsigned i = 1; i <= j; ++i) c = c * (q - j + i) / i;
  return c;
}

double brute_eq(std::uint64_t m, std::uint64_t p, unsigned q) {
  const double lp = std::log(static_cast<double>(p));
  std::vector<double> cuts;
  for (std::uint64_t d : brute_divisors(m)) {
    const double l = std::log(static_cast<double>(d));
    for (double c : {l, l - 1.0, l + lp, l + lp - 1.0}) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    const double v = 0.5 * (cuts[i] + cuts[i + 1]);
    const double a = static_cast<double>(brute_delta_at(m, v));
    const double b = static_cast<double>(brute_delta_at(m, v - lp));
    for (unsigned j = 1; j < q; ++j) sum += binomial(q, j) * std::pow(a, j) * std::pow(b, q - j) * len;
  }
  return sum;
}

TEST(IsPrime, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool expected = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && expected; ++d) expected = n % d != 0;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
}

TEST(IsPrime, LargeValues) {
  EXPECT_TRUE(is_prime(1'000'000'007));
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST(Factor, Examples) {
  EXPECT_TRUE(factor(1).factors().empty());
  const auto f = factor(360);
  const std::vector<PrimePower> expected{{2, 3}, {3, 2}, {5, 1}};
  EXPECT_EQ(std::vector<PrimePower>(f.factors().begin(), f.factors().end()), expected);
  const auto g = factor(1'000'000'007);
  ASSERT_EQ(g.factors().size(), 1u);
  EXPECT_EQ(g.factors()[0], (PrimePower{1'000'000'007, 1}));
  EXPECT_THROW(factor(0), InvalidArgument);
}

TEST(Factor, LargeSemiprimesAndPowers) {
  const std::uint64_t n = 1'000'000'007ULL * 998'244'353ULL;
  const auto f = factor(n);
  const std::vector<PrimePower> expected{{998'244'353, 1}, {1'000'000'007, 1}};
  EXPECT_EQ(std::vector<PrimePower>(f.factors().begin(), f.factors().end()), expected);
  const auto sq = factor(4'294'967'291ULL * 4'294'967'291ULL);
  ASSERT_EQ(sq.factors().size(), 1u);
  EXPECT_EQ(sq.factors()[0].exponent, 2u);
  const auto pow2 = factor(std::uint64_t{1} << 63);
  EXPECT_EQ(pow2.factors()[0], (PrimePower{2, 63}));
}

TEST(Factor, RandomProductsRecompose) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = (rng() >> (rng() % 63)) | 1;
    const auto f = factor(n);
    std::uint64_t m = 1;
    for (const auto& [p, e] : f.factors()) {
      EXPECT_TRUE(is_prime(p));
      for (unsigned k = 0; k < e; ++k) m *= p;
    }
    EXPECT_EQ(m, n);
    EXPECT_EQ(f.value(), n);
  }
}

TEST(Factorization, ArithmeticFunctions) {
  const auto f = factor(360);
  EXPECT_EQ(f.tau(), 24u);
  EXPECT_EQ(f.omega(), 3u);
  EXPECT_EQ(f.big_omega(), 6u);
  EXPECT_EQ(f.mobius(), 0);
  EXPECT_FALSE(f.squarefree());
  EXPECT_EQ(f.largest_prime(), 5u);
  EXPECT_EQ(factor(30).mobius(), -1);
  EXPECT_EQ(factor(6).mobius(), 1);
  EXPECT_EQ(factor(1).largest_prime(), 1u);
}

TEST(Factorization, FromPrimePowersValidates) {
  EXPECT_EQ(Factorization::from_prime_powers({{2, 2}, {7, 1}}).value(), 28u);
  EXPECT_THROW(Factorization::from_prime_powers({{4, 1}}), InvalidArgument);
  EXPECT_THROW(Factorization::from_prime_powers({{3, 1}, {2, 1}}), InvalidArgument);
  EXPECT_THROW(Factorization::from_prime_powers({{2, 0}}), InvalidArgument);
  EXPECT_THROW(Factorization::from_prime_powers({{2, 64}}), InvalidArgument);
}

TEST(BelowETimes, FarFromE) {
  EXPECT_TRUE(below_e_times(2, 1));
  EXPECT_FALSE(below_e_times(3, 1));
  EXPECT_TRUE(below_e_times(1, 1));
  EXPECT_FALSE(below_e_times(30, 10));
}

// Continued-fraction convergents of e lie within 1e-17 relative of e, which
// forces the exact path. Signs computed at 60 digits.
TEST(BelowETimes, ConvergentsOfE) {
  struct Case {
    std::uint64_t b, a;
    bool below;
  };
  const Case cases[] = {
      {49171, 18089, false},         {517656, 190435, true},       {566827, 208524, false},
      {1084483, 398959, true},       {13580623, 4996032, false},   {14665106, 5394991, true},
      {28245729, 10391023, false},   {410105312, 150869313, true}, {438351041, 161260336, false},
      {848456353, 312129649, true},
  };
  for (const auto& c : cases) EXPECT_EQ(below_e_times(c.b, c.a), c.below) << c.b << "/" << c.a;
}

TEST(DivisorLogSet, Examples) {
  const DivisorLogSet d1(factor(1));
  EXPECT_EQ(std::vector<std::uint64_t>(d1.divisors().begin(), d1.divisors().end()), std::vector<std::uint64_t>{1});
  const DivisorLogSet d6(factor(6));
  EXPECT_EQ(std::vector<std::uint64_t>(d6.divisors().begin(), d6.divisors().end()),
            (std::vector<std::uint64_t>{1, 2, 3, 6}));
  const DivisorLogSet d360(factor(360));
  ASSERT_EQ(d360.size(), 24u);
  EXPECT_EQ(std::vector<std::uint64_t>(d360.divisors().begin(), d360.divisors().begin() + 5),
            (std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(std::vector<std::uint64_t>(d360.divisors().begin(), d360.divisors().end()), brute_divisors(360));
  EXPECT_THROW(DivisorLogSet(factor(360), 10), BudgetExceeded);
}

TEST(DeltaAt, Examples) {
  const DivisorLogSet d1(factor(1));
  EXPECT_EQ(delta_at(d1, -0.5), 1u);
  EXPECT_EQ(delta_at(d1, 0.0), 0u);
  EXPECT_EQ(delta_at(DivisorLogSet(factor(6)), std::log(2.0) - 0.01), 2u);
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(DivisorLogSet(factor(1))), 1u);
  EXPECT_EQ(delta(DivisorLogSet(factor(12))), 3u);
  for (std::uint64_t p : {3u, 5u, 101u, 1'000'003u}) EXPECT_EQ(delta(DivisorLogSet(factor(p))), 1u);
  EXPECT_EQ(delta(DivisorLogSet(factor(2))), 2u);
}

TEST(Delta, MatchesWindowScanOracle) {
  for (std::uint64_t n = 1; n <= 3000; ++n) EXPECT_EQ(delta(DivisorLogSet(factor(n))), brute_delta(n)) << n;
}

// The maximal windows can be very narrow (4134 has one of width 1.2e-4), so
// the grid is supplemented by points just left of each log d.
TEST(Delta, MatchesGridAndAnchorMaximum) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const DivisorLogSet d(factor(n));
    std::uint64_t best = 0;
    for (double l : d.logs()) best = std::max(best, delta_at(d, l - 1e-9));
    const double top = std::log(static_cast<double>(n));
    for (std::int64_t k = 0;; ++k) {
      const double u = -1.0 - 1e-3 + static_cast<double>(k) * 1e-3;
      if (u > top) break;
      best = std::max(best, delta_at(d, u));
    }
    ASSERT_EQ(best, delta(d)) << n;
  }
}

TEST(Delta, TauBoundsAndPairInequality) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const DivisorLogSet d(factor(n));
    const std::uint64_t tau = d.size();
    const std::uint64_t dn = delta(d);
    const std::uint64_t lower =
        n == 1 ? 1 : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(static_cast<double>(tau) / std::log(n)));
    ASSERT_LE(lower, dn) << n;
    ASSERT_LE(dn, tau) << n;
    ASSERT_GE(dn * tau, close_pair_count(d)) << n;
  }
}

TEST(ClosePairCount, MatchesBruteForce) {
  for (std::uint64_t n : {1u, 6u, 12u, 360u, 720u, 5040u}) {
    const auto div = brute_divisors(n);
    std::uint64_t c = 0;
    for (std::uint64_t a : div) {
      for (std::uint64_t b : div) {
        const double r = std::log(static_cast<double>(b) / static_cast<double>(a));
        if (r > 0.0 && r <= 1.0) ++c;
      }
    }
    EXPECT_EQ(close_pair_count(DivisorLogSet(factor(n))), c) << n;
  }
}

TEST(DeltaProfile, Examples) {
  const auto p1 = delta_profile(DivisorLogSet(factor(1)));
  ASSERT_EQ(p1.values().size(), 1u);
  EXPECT_EQ(p1.breakpoints()[0], -1.0);
  EXPECT_EQ(p1.breakpoints()[1], 0.0);
  EXPECT_EQ(p1.values()[0], 1);

  const auto p2 = delta_profile(DivisorLogSet(factor(2)));
  const double l2 = std::log(2.0);
  ASSERT_EQ(p2.values().size(), 3u);
  EXPECT_EQ(std::vector<std::int64_t>(p2.values().begin(), p2.values().end()), (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_DOUBLE_EQ(p2.breakpoints()[1], l2 - 1.0);
  EXPECT_DOUBLE_EQ(p2.breakpoints()[2], 0.0);
  EXPECT_DOUBLE_EQ(p2.breakpoints()[3], l2);

  const auto p6 = delta_profile(DivisorLogSet(factor(6)));
  EXPECT_EQ(p6.max_value(), 2);
  EXPECT_NEAR(p6.integral(), 4.0, 1e-14);
}

TEST(DeltaProfile, AgreesWithDeltaAtEverywhere) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = 1 + rng() % 100000;
    const DivisorLogSet d(factor(n));
    const auto prof = delta_profile(d);
    EXPECT_EQ(static_cast<std::uint64_t>(prof.max_value()), delta(d));
    for (int k = 0; k < 50; ++k) {
      const double u = -1.5 + (std::log(static_cast<double>(n)) + 2.0) * static_cast<double>(rng() % 100000) / 1e5;
      EXPECT_EQ(static_cast<std::uint64_t>(prof(u)), delta_at(d, u)) << n << " " << u;
    }
  }
}

TEST(Mq, Examples) {
  for (std::uint64_t n : {1u, 2u, 12u, 360u, 9699690u}) {
    const DivisorLogSet d(factor(n));
    EXPECT_NEAR(mq(d, 1), static_cast<double>(d.size()), 1e-12 * static_cast<double>(d.size()));
  }
  for (unsigned q = 1; q <= 5; ++q) EXPECT_NEAR(mq(DivisorLogSet(factor(1)), q), 1.0, 1e-15);
  EXPECT_NEAR(mq(DivisorLogSet(factor(6)), 2), brute_mq(6, 2), 1e-13);
  EXPECT_NEAR(mq(DivisorLogSet(factor(6)), 2), 6.416481, 1e-6);
}

TEST(Mq, MatchesPiecewiseOracle) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const DivisorLogSet d(factor(n));
    for (unsigned q = 1; q <= 4; ++q) {
      const double expected = brute_mq(n, q);
      EXPECT_NEAR(mq(d, q), expected, 1e-12 * expected) << n << " " << q;
    }
  }
}

TEST(Mq, MomentInequality) {
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const DivisorLogSet d(factor(n));
    for (unsigned q = 1; q <= 4; ++q) {
      ASSERT_LE(std::pow(mq(d, q + 1), 1.0 / (q + 1)), 2.0 * std::pow(mq(d, q), 1.0 / q) * (1 + 1e-12)) << n;
    }
  }
}

TEST(EqCross, Examples) {
  const DivisorLogSet d1(factor(1));
  EXPECT_NEAR(eq_cross(d1, 2, 2), 2.0 * (1.0 - std::log(2.0)), 1e-15);
  EXPECT_NEAR(eq_cross(d1, 2, 2), 0.6137, 1e-4);
  EXPECT_EQ(eq_cross(d1, 3, 2), 0.0);
  EXPECT_EQ(eq_cross(d1, 101, 3), 0.0);
}

TEST(EqCross, RejectsBadArguments) {
  const DivisorLogSet d6(factor(6));
  EXPECT_THROW(eq_cross(d6, 2, 2), InvalidArgument);
  EXPECT_THROW(eq_cross(d6, 4, 2), InvalidArgument);
  EXPECT_THROW(eq_cross(d6, 5, 1), InvalidArgument);
}

TEST(EqCross, MatchesPiecewiseOracle) {
  for (std::uint64_t m : {1u, 2u, 6u, 30u, 35u, 210u}) {
    for (std::uint64_t p : {11u, 13u, 97u}) {
      for (unsigned q = 2; q <= 4; ++q) {
        const double expected = brute_eq(m, p, q);
        EXPECT_NEAR(eq_cross(DivisorLogSet(factor(m)), p, q), expected, 1e-12 * std::max(1.0, expected));
      }
    }
  }
}

std::uint64_t random_squarefree(std::mt19937_64& rng, std::uint64_t hi) {
  for (;;) {
    const std::uint64_t n = 1 + rng() % hi;
    if (factor(n).squarefree()) return n;
  }
}

TEST(EqCross, RecurrenceForRandomSquarefree) {
  std::mt19937_64 rng(11);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 97, 101, 997};
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = random_squarefree(rng, 10000);
    std::uint64_t p;
    do {
      p = primes[rng() % primes.size()];
    } while (m % p == 0);
    const unsigned q = 2 + static_cast<unsigned>(rng() % 2);
    const DivisorLogSet dm(factor(m));
    const DivisorLogSet dmp(factor(m * p));
    const double lhs = mq(dmp, q);
    EXPECT_NEAR(lhs, 2.0 * mq(dm, q) + eq_cross(dm, p, q), 1e-10 * lhs) << m << " " << p << " " << q;
  }
}

TEST(DeltaSplitting, SquarefreeTimesPrime) {
  std::mt19937_64 rng(5);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 31, 61, 101, 211, 997};
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = random_squarefree(rng, 10000);
    std::uint64_t p;
    do {
      p = primes[rng() % primes.size()];
    } while (m % p == 0);
    const DivisorLogSet dm(factor(m));
    const DivisorLogSet dmp(factor(m * p));
    const double lp = std::log(static_cast<double>(p));
    for (int k = 0; k < 400; ++k) {
      const double u = -1.2 + (std::log(static_cast<double>(m * p)) + 1.4) * k / 400.0 + 1.234e-4;
      ASSERT_EQ(delta_at(dmp, u), delta_at(dm, u) + delta_at(dm, u - lp)) << m << " " << p << " " << u;
    }
  }
}

TEST(TruncateByPrimes, Examples) {
  EXPECT_EQ(truncate_by_primes(factor(30), 2).value(), 6u);
  EXPECT_EQ(truncate_by_primes(factor(30), 0).value(), 1u);
  EXPECT_EQ(truncate_by_primes(factor(30), 5).value(), 30u);
  EXPECT_THROW(truncate_by_primes(factor(12), 1), InvalidArgument);
}

}  // namespace
}  // namespace fdelta::arith
