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

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "fdelta/arith.hpp"
#include "fdelta/error.hpp"

namespace fdelta::arith {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant; returns a nontrivial factor of the odd composite n.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  const int s = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> s;
  // These twelve bases are a deterministic witness set below 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization Factorization::from_prime_powers(std::vector<PrimePower> factors) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (!is_prime(p)) throw InvalidArgument("Factorization: " + std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidArgument("Factorization: zero exponent");
    if (i > 0 && factors[i - 1].prime >= p) {
      throw InvalidArgument("Factorization: primes must be strictly increasing");
    }
    for (unsigned k = 0; k < e; ++k) {
      if (__builtin_mul_overflow(n, p, &n)) throw InvalidArgument("Factorization: product overflows 64 bits");
    }
  }
  return Factorization(n, std::move(factors));
}

std::uint64_t Factorization::tau() const {
  std::uint64_t t = 1;
  for (const auto& f : factors_) t *= f.exponent + 1;
  return t;
}

unsigned Factorization::big_omega() const {
  unsigned s = 0;
  for (const auto& f : factors_) s += f.exponent;
  return s;
}

int Factorization::mobius() const {
  if (!squarefree()) return 0;
  return (factors_.size() % 2 == 0) ? 1 : -1;
}

bool Factorization::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint64_t Factorization::largest_prime() const { return factors_.empty() ? 1 : factors_.back().prime; }

bool Factorization::divisible_by(std::uint64_t p) const {
  return std::any_of(factors_.begin(), factors_.end(), [p](const PrimePower& f) { return f.prime == p; });
}

Factorization factor(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factor: n must be positive");
  std::vector<PrimePower> out;
  const std::uint64_t original = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialLimit && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (n <= kTrialLimit * kTrialLimit || is_prime(n)) {
      // Either no factor below 10^6 and n < 10^12 (so n is prime), or MR says so.
      out.push_back({n, 1});
    } else {
      std::vector<std::uint64_t> primes;
      factor_large(n, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  return FactorizationBuilder::trusted(original, std::move(out));
}

}  // namespace fdelta::arith
