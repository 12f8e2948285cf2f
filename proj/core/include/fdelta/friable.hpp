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

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "fdelta/arith.hpp"

namespace fdelta::friable {

// (x, y) with the derived quantities used throughout.
struct FriablePair {
  double x;
  double y;
  double u;       // log x / log y
  double lambda;  // y / log x
  double u_bar;   // min(y / log y, u)
  double eps_y;   // 1 / sqrt(log y)
  double eta_y;   // log log y / log y

  // Requires x > 1 and y >= 2.
  static FriablePair make(double x, double y);
};

class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultMaxBound = std::uint64_t{1} << 32;

  std::uint64_t bound() const { return bound_; }
  std::span<const std::uint64_t> primes() const { return primes_; }
  // Primes <= y.
  std::span<const std::uint64_t> primes_up_to(double y) const;
  bool covers(double y) const { return static_cast<double>(bound_) >= y; }

  // Text form: one prime per line.
  void save_text(const std::filesystem::path& path) const;
  // Validates ordering, primality and the bound; throws InvalidArgument.
  static PrimeTable load_text(const std::filesystem::path& path, std::uint64_t bound);

 private:
  friend PrimeTable sieve(std::uint64_t bound, std::uint64_t max_bound);
  PrimeTable(std::uint64_t bound, std::vector<std::uint64_t> primes)
      : bound_(bound), primes_(std::move(primes)) {}

  std::uint64_t bound_;
  std::vector<std::uint64_t> primes_;
};

// Sieve of Eratosthenes over odd numbers. Throws InvalidArgument for
// bound < 2 and BudgetExceeded for bound > max_bound.
PrimeTable sieve(std::uint64_t bound, std::uint64_t max_bound = PrimeTable::kDefaultMaxBound);

// Loads primes_<bound>.txt from cache_dir if present and valid, otherwise
// sieves and tries to write it. An empty path disables the cache.
PrimeTable cached_sieve(std::uint64_t bound, const std::filesystem::path& cache_dir);

// Psi(x, y) = #{n <= x : P+(n) <= y}, exact. Requires pt.covers(y).
std::uint64_t psi_exact(double x, double y, const PrimeTable& pt);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

using FriableVisitor = std::function<void(const arith::Factorization&)>;

// Visits each element of S(x, y) once, skipping integers divisible by any
// prime in `excluded`. Throws BudgetExceeded once more than `budget`
// integers would be visited.
void enumerate_friable(double x, double y, const PrimeTable& pt, const FriableVisitor& visitor,
                       std::uint64_t budget = kDefaultEnumerationBudget,
                       std::span<const std::uint64_t> excluded = {});

// Psi(x, y; f).
double psi_weighted(double x, double y, const std::function<double(const arith::Factorization&)>& f,
                    const PrimeTable& pt, std::uint64_t budget = kDefaultEnumerationBudget);

// Integer sums over S(x, y) that feed the mean value and its bounds.
struct FriableSums {
  std::uint64_t psi = 0;        // Psi(x, y)
  std::uint64_t sum_delta = 0;  // Psi(x, y; Delta)
  std::uint64_t sum_tau = 0;    // Psi(x, y; tau)

  double mean_value() const { return static_cast<double>(sum_delta) / static_cast<double>(psi); }
};

FriableSums friable_sums(double x, double y, const PrimeTable& pt,
                         std::uint64_t budget = kDefaultEnumerationBudget);

// S(x, y) = Psi(x, y; Delta) / Psi(x, y).
double mean_value_S(double x, double y, const PrimeTable& pt,
                    std::uint64_t budget = kDefaultEnumerationBudget);

// T_d(x, y) = sum over m in S(x, y), (m, d) = 1 of 2^-Omega(m). Requires d
// to be y-friable.
double t_d_sum(double x, double y, const arith::Factorization& d, const PrimeTable& pt,
               std::uint64_t budget = kDefaultEnumerationBudget);

struct Lemma21Quantities {
  double q_d;      // prod_{p|d} (1 - 1/2p)
  double w_d;      // prod_{p|d} (1 + 1/(2 p^(1 - kappa_y)))
  double theta_d;  // sum_{p|d} log p / p^(1 - kappa_y)
  double kappa_y;  // (log y)^(-2/5)
  double C;        // prod_p sqrt(1 - 1/p) / (1 - 1/2p)
};

Lemma21Quantities lemma21_quantities(const arith::Factorization& d, double y);

// prod_p sqrt(1 - 1/p) / (1 - 1/2p), to about 1e-15.
double t_sum_constant();

}  // namespace fdelta::friable
