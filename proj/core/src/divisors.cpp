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
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fdelta/arith.hpp"
#include "fdelta/error.hpp"

namespace fdelta::arith {
namespace {

using boost::multiprecision::cpp_int;

// floor(e * 10^80).
const cpp_int& e_scaled() {
  static const cpp_int value(
      "271828182845904523536028747135266249775724709369995957496696762772407663035354759");
  return value;
}

const cpp_int& ten_80() {
  static const cpp_int value = boost::multiprecision::pow(cpp_int(10), 80);
  return value;
}

}  // namespace

bool below_e_times(std::uint64_t b, std::uint64_t a) {
  const double gap = std::log(static_cast<double>(b)) - std::log(static_cast<double>(a));
  if (gap < 1.0 - 1e-9) return true;
  if (gap > 1.0 + 1e-9) return false;
  // E = floor(e 10^80) satisfies E <= e 10^80 < E + 1, so the integers decide
  // unless |b/a - e| < 10^-80, which cannot happen for 64-bit a.
  const cpp_int lhs = cpp_int(b) * ten_80();
  const cpp_int rhs = e_scaled() * a;
  if (lhs < rhs) return true;
  if (lhs >= rhs + a) return false;
  throw ConvergenceError("below_e_times: undecidable at 80 digits");
}

DivisorLogSet::DivisorLogSet(const Factorization& f, std::size_t cap) : n_(f.value()) {
  const std::uint64_t tau = f.tau();
  if (tau > cap) {
    throw BudgetExceeded("divisor set of " + std::to_string(n_) + " has " + std::to_string(tau) +
                         " entries, cap is " + std::to_string(cap));
  }
  divisors_.reserve(tau);
  divisors_.push_back(1);
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = divisors_.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors_.push_back(divisors_[i] * pk);
    }
  }
  std::sort(divisors_.begin(), divisors_.end());
  logs_.reserve(divisors_.size());
  for (std::uint64_t d : divisors_) logs_.push_back(std::log(static_cast<double>(d)));
}

std::uint64_t delta_at(const DivisorLogSet& d, double u) {
  const auto logs = d.logs();
  // u < log d' <= u + 1
  const auto lo = std::upper_bound(logs.begin(), logs.end(), u);
  const auto hi = std::upper_bound(lo, logs.end(), u + 1.0);
  return static_cast<std::uint64_t>(hi - lo);
}

std::uint64_t delta(const DivisorLogSet& d) {
  const auto div = d.divisors();
  std::uint64_t best = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < div.size(); ++i) {
    j = std::max(j, i);
    while (j < div.size() && below_e_times(div[j], div[i])) ++j;
    best = std::max<std::uint64_t>(best, j - i);
  }
  return best;
}

std::uint64_t close_pair_count(const DivisorLogSet& d) {
  const auto div = d.divisors();
  std::uint64_t pairs = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < div.size(); ++i) {
    j = std::max(j, i + 1);
    while (j < div.size() && below_e_times(div[j], div[i])) ++j;
    pairs += j - i - 1;
  }
  return pairs;
}

StepFunction delta_profile(const DivisorLogSet& d) {
  const auto div = d.divisors();
  const auto logs = d.logs();
  // Window starts at log d - 1 (count +1) and ends at log d (count -1). Both
  // lists are already sorted; merge them comparing the integers: the start of
  // a precedes the end of b iff a < e * b. No start coincides with an end.
  std::vector<double> bp;
  std::vector<std::int64_t> values;
  bp.reserve(2 * div.size());
  values.reserve(2 * div.size());
  std::size_t is = 0, ie = 0;
  std::int64_t count = 0;
  while (ie < div.size()) {
    const bool take_start = is < div.size() && below_e_times(div[is], div[ie]);
    const double pos = take_start ? logs[is] - 1.0 : logs[ie];
    count += take_start ? 1 : -1;
    if (take_start) {
      ++is;
    } else {
      ++ie;
    }
    if (!bp.empty() && pos <= bp.back()) {
      // Rounding collapsed two distinct breakpoints: drop the empty interval.
      values.back() = count;
      continue;
    }
    bp.push_back(pos);
    values.push_back(count);
  }
  values.pop_back();  // the count after the final end is 0 and unbounded
  return StepFunction(std::move(bp), std::move(values));
}

double mq(const DivisorLogSet& d, unsigned q) {
  if (q == 0) throw InvalidArgument("mq: q must be >= 1");
  return delta_profile(d).integral_power(q);
}

double eq_cross(const DivisorLogSet& m, std::uint64_t p, unsigned q) {
  if (q < 2) throw InvalidArgument("eq_cross: q must be >= 2");
  if (!is_prime(p)) throw InvalidArgument("eq_cross: " + std::to_string(p) + " is not prime");
  if (m.source() % p == 0) {
    throw InvalidArgument("eq_cross: p = " + std::to_string(p) + " divides m = " + std::to_string(m.source()));
  }
  const StepFunction a = delta_profile(m);
  const StepFunction b = a.shifted(std::log(static_cast<double>(p)));
  std::vector<double> binom(q + 1, 1.0);
  for (unsigned j = 1; j <= q; ++j) binom[j] = binom[j - 1] * (q - j + 1) / j;
  return integrate_pair(a, b, [&](std::int64_t ha, std::int64_t hb) {
    if (ha == 0 || hb == 0) return 0.0;
    double s = 0.0;
    for (unsigned j = 1; j < q; ++j) {
      s += binom[j] * std::pow(static_cast<double>(ha), j) * std::pow(static_cast<double>(hb), q - j);
    }
    return s;
  });
}

Factorization truncate_by_primes(const Factorization& f, std::size_t k) {
  if (!f.squarefree()) {
    throw InvalidArgument("truncate_by_primes: " + std::to_string(f.value()) + " is not squarefree");
  }
  const auto all = f.factors();
  const std::size_t keep = std::min(k, all.size());
  std::vector<PrimePower> head(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
  std::uint64_t n = 1;
  for (const auto& pp : head) n *= pp.prime;
  return FactorizationBuilder::trusted(n, std::move(head));
}

}  // namespace fdelta::arith
