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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fdelta/step_function.hpp"

namespace fdelta::arith {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// n together with its canonical prime-power decomposition (primes strictly
// increasing, exponents >= 1). Immutable.
class Factorization {
 public:
  // The unit: n = 1, no factors.
  Factorization() = default;

  // Validates primality, ordering and exponents; throws InvalidArgument on
  // any violation or if the product overflows 64 bits.
  static Factorization from_prime_powers(std::vector<PrimePower> factors);

  std::uint64_t value() const { return n_; }
  std::span<const PrimePower> factors() const { return factors_; }

  std::uint64_t tau() const;
  unsigned omega() const { return static_cast<unsigned>(factors_.size()); }
  unsigned big_omega() const;
  int mobius() const;
  bool squarefree() const;
  // P+(n), with P+(1) = 1.
  std::uint64_t largest_prime() const;
  bool divisible_by(std::uint64_t p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  friend class FactorizationBuilder;
  Factorization(std::uint64_t n, std::vector<PrimePower> factors)
      : n_(n), factors_(std::move(factors)) {}

  std::uint64_t n_ = 1;
  std::vector<PrimePower> factors_;
};

// Constructs Factorizations from data already known to be canonical (the
// friable enumerator builds them incrementally). No validation.
class FactorizationBuilder {
 public:
  static Factorization trusted(std::uint64_t n, std::vector<PrimePower> factors) {
    return Factorization(n, std::move(factors));
  }
};

// Trial division to 10^6, then Miller-Rabin + Pollard-Brent on the cofactor.
// Throws InvalidArgument for n = 0.
Factorization factor(std::uint64_t n);

// Exact test of b < e * a for positive integers, i.e. log(b / a) < 1. Falls
// back to multiprecision arithmetic when the floating-point gap is too small
// to decide.
bool below_e_times(std::uint64_t b, std::uint64_t a);

// Sorted divisors of n with their natural logarithms.
class DivisorLogSet {
 public:
  static constexpr std::size_t kDefaultCap = 10'000'000;

  // Throws BudgetExceeded if tau(n) > cap.
  explicit DivisorLogSet(const Factorization& f, std::size_t cap = kDefaultCap);

  std::uint64_t source() const { return n_; }
  std::span<const std::uint64_t> divisors() const { return divisors_; }
  std::span<const double> logs() const { return logs_; }
  std::size_t size() const { return divisors_.size(); }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> divisors_;
  std::vector<double> logs_;
};

// Delta(n, u) = #{d | n : e^u < d <= e^(u+1)}.
std::uint64_t delta_at(const DivisorLogSet& d, double u);

// Delta(n) = max_u Delta(n, u), via windows [d, e*d) anchored at each divisor.
std::uint64_t delta(const DivisorLogSet& d);

// #{(d, d') : d, d' | n, 0 < log(d'/d) <= 1}.
std::uint64_t close_pair_count(const DivisorLogSet& d);

// u -> Delta(n, u) as an exact step function with breakpoints
// {log d - 1, log d}. The ordering of breakpoints is decided on the integers.
StepFunction delta_profile(const DivisorLogSet& d);

// M_q(n) = integral over R of Delta(n, u)^q du.
double mq(const DivisorLogSet& d, unsigned q);

// E_q(m, p) = sum_{1 <= j < q} C(q, j) * int Delta(m; v)^j Delta(m; v - log p)^(q-j) dv.
// Throws InvalidArgument if p is not prime, p | m or q < 2.
double eq_cross(const DivisorLogSet& m, std::uint64_t p, unsigned q);

// Product of the k smallest primes of a squarefree n (n itself if k >= omega).
Factorization truncate_by_primes(const Factorization& f, std::size_t k);

}  // namespace fdelta::arith
