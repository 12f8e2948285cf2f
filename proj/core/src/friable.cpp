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

#include "fdelta/friable.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <string>
#include <unordered_map>

#include "fdelta/error.hpp"

namespace fdelta::friable {
namespace {

using arith::Factorization;
using arith::FactorizationBuilder;
using arith::PrimePower;

std::uint64_t floor_x(double x) {
  if (!(x >= 1.0)) throw InvalidArgument("x must be >= 1, got " + std::to_string(x));
  if (x >= 1.8e19) throw InvalidArgument("x exceeds the 64-bit range");
  return static_cast<std::uint64_t>(std::floor(x));
}

void require_cover(const PrimeTable& pt, double y) {
  if (!(y >= 1.0)) throw InvalidArgument("y must be >= 1, got " + std::to_string(y));
  if (!pt.covers(y)) {
    throw InvalidArgument("prime table bound " + std::to_string(pt.bound()) + " does not cover y = " +
                          std::to_string(y));
  }
}

// Psi(x, p_k) by the recursion over the exponent of the largest allowed
// prime, memoized for small x.
class PsiCounter {
 public:
  explicit PsiCounter(std::span<const std::uint64_t> primes) : primes_(primes) {}

  std::uint64_t count(std::uint64_t x, std::size_t k) {
    if (x < 2 || k == 0) return 1;
    if (primes_[k - 1] >= x) return x;
    if (k == 1) return static_cast<std::uint64_t>(std::bit_width(x));
    if (k == 2) return count_3smooth(x);
    const bool memo = x <= kMemoLimit;
    std::uint64_t key = 0;
    if (memo) {
      key = x * (primes_.size() + 1) + k;
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const std::uint64_t p = primes_[k - 1];
    std::uint64_t total = 0;
    for (std::uint64_t m = x;; m /= p) {
      // Only primes <= m matter below this node.
      std::size_t k_next = k - 1;
      if (primes_[k_next - 1] > m) {
        k_next = static_cast<std::size_t>(
            std::upper_bound(primes_.begin(), primes_.begin() + static_cast<std::ptrdiff_t>(k_next), m) -
            primes_.begin());
      }
      total += count(m, k_next);
      if (m < p) break;
    }
    if (memo) memo_.emplace(key, total);
    return total;
  }

 private:
  static constexpr std::uint64_t kMemoLimit = 1 << 16;

  static std::uint64_t count_3smooth(std::uint64_t x) {
    std::uint64_t total = 0;
    for (std::uint64_t m = x; m >= 1; m /= 3) total += static_cast<std::uint64_t>(std::bit_width(m));
    return total;
  }

  std::span<const std::uint64_t> primes_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

// Depth-first walk over exponent vectors, primes visited in increasing order
// so the factor list stays canonical.
class FriableWalker {
 public:
  FriableWalker(std::uint64_t x, std::vector<std::uint64_t> primes, const FriableVisitor& visitor,
                std::uint64_t budget)
      : x_(x), primes_(std::move(primes)), visitor_(visitor), budget_(budget) {}

  void run() { descend(1, 0); }

 private:
  void descend(std::uint64_t n, std::size_t start) {
    visit(n);
    for (std::size_t i = start; i < primes_.size(); ++i) {
      const std::uint64_t p = primes_[i];
      if (n > x_ / p) break;
      std::uint64_t m = n * p;
      factors_.push_back({p, 1});
      for (;;) {
        descend(m, i + 1);
        if (m > x_ / p) break;
        m *= p;
        ++factors_.back().exponent;
      }
      factors_.pop_back();
    }
  }

  void visit(std::uint64_t n) {
    if (++visited_ > budget_) {
      throw BudgetExceeded("friable enumeration exceeded the budget of " + std::to_string(budget_) +
                           " integers");
    }
    visitor_(FactorizationBuilder::trusted(n, factors_));
  }

  std::uint64_t x_;
  std::vector<std::uint64_t> primes_;
  const FriableVisitor& visitor_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<PrimePower> factors_;
};

// zeta(s) - 1 for s >= 2 by Euler-Maclaurin at N = 20.
double zeta_minus_one(double s) {
  constexpr int kN = 20;
  double sum = 0.0;
  for (int n = kN - 1; n >= 2; --n) sum += std::pow(n, -s);
  const double N = kN;
  sum += std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);
  // B_2j / (2j)!
  constexpr double kBernoulliOverFactorial[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                                1.0 / 47900160.0, -691.0 / 1307674368000.0};
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double power = std::pow(N, -s - 1.0);
  for (int j = 0; j < 6; ++j) {
    sum += kBernoulliOverFactorial[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= N * N;
  }
  return sum;
}

// Sum over all primes of p^-k via Moebius inversion of log zeta.
double prime_zeta(int k) {
  double total = 0.0;
  for (int m = 1; m * k < 400; ++m) {
    const int mu = arith::factor(static_cast<std::uint64_t>(m)).mobius();
    if (mu == 0) continue;
    const double term = std::log1p(zeta_minus_one(static_cast<double>(m * k))) / m;
    total += mu * term;
    if (std::abs(term) < 1e-22) break;
  }
  return total;
}

}  // namespace

FriablePair FriablePair::make(double x, double y) {
  if (!(x > 1.0)) throw InvalidArgument("FriablePair: x must be > 1");
  if (!(y >= 2.0)) throw InvalidArgument("FriablePair: y must be >= 2");
  const double lx = std::log(x);
  const double ly = std::log(y);
  const double u = lx / ly;
  return FriablePair{x, y, u, y / lx, std::min(y / ly, u), 1.0 / std::sqrt(ly), std::log(ly) / ly};
}

std::span<const std::uint64_t> PrimeTable::primes_up_to(double y) const {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), y,
                                    [](double v, std::uint64_t p) { return v < static_cast<double>(p); });
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

void PrimeTable::save_text(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (std::uint64_t p : primes_) out << p << '\n';
  if (!out) throw InvalidArgument("short write to " + path.string());
}

PrimeTable PrimeTable::load_text(const std::filesystem::path& path, std::uint64_t bound) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::vector<std::uint64_t> primes;
  std::uint64_t p;
  while (in >> p) {
    if (!primes.empty() && p <= primes.back()) throw InvalidArgument(path.string() + ": not increasing");
    if (p > bound || !arith::is_prime(p)) throw InvalidArgument(path.string() + ": bad entry " + std::to_string(p));
    primes.push_back(p);
  }
  if (!in.eof()) throw InvalidArgument(path.string() + ": parse error");
  return PrimeTable(bound, std::move(primes));
}

PrimeTable sieve(std::uint64_t bound, std::uint64_t max_bound) {
  if (bound < 2) throw InvalidArgument("sieve: bound must be >= 2");
  if (bound > max_bound) {
    throw BudgetExceeded("sieve: bound " + std::to_string(bound) + " exceeds the cap " + std::to_string(max_bound));
  }
  // composite[i] refers to 2i + 1.
  const std::uint64_t half = (bound - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= bound; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<std::uint64_t> primes{2};
  for (std::uint64_t i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(2 * i + 1);
  }
  return PrimeTable(bound, std::move(primes));
}

PrimeTable cached_sieve(std::uint64_t bound, const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return sieve(bound);
  const auto file = cache_dir / ("primes_" + std::to_string(bound) + ".txt");
  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    try {
      return PrimeTable::load_text(file, bound);
    } catch (const InvalidArgument&) {
      // Corrupt cache entry; fall through and rebuild it.
    }
  }
  PrimeTable pt = sieve(bound);
  std::filesystem::create_directories(cache_dir, ec);
  try {
    const auto tmp = file.string() + ".tmp";
    pt.save_text(tmp);
    std::filesystem::rename(tmp, file, ec);
  } catch (const InvalidArgument&) {
    // Read-only cache location: not fatal.
  }
  return pt;
}

std::uint64_t psi_exact(double x, double y, const PrimeTable& pt) {
  const std::uint64_t n = floor_x(x);
  require_cover(pt, y);
  const auto primes = pt.primes_up_to(y);
  PsiCounter counter(primes);
  std::size_t k = primes.size();
  if (k > 0 && primes[k - 1] > n) {
    k = static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), n) - primes.begin());
  }
  return counter.count(n, k);
}

void enumerate_friable(double x, double y, const PrimeTable& pt, const FriableVisitor& visitor,
                       std::uint64_t budget, std::span<const std::uint64_t> excluded) {
  const std::uint64_t n = floor_x(x);
  require_cover(pt, y);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : pt.primes_up_to(y)) {
    if (p > n) break;
    if (std::find(excluded.begin(), excluded.end(), p) == excluded.end()) primes.push_back(p);
  }
  FriableWalker(n, std::move(primes), visitor, budget).run();
}

double psi_weighted(double x, double y, const std::function<double(const Factorization&)>& f,
                    const PrimeTable& pt, std::uint64_t budget) {
  double sum = 0.0, comp = 0.0;
  enumerate_friable(
      x, y, pt,
      [&](const Factorization& m) {
        const double term = f(m);
        const double t = sum + term;
        comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
      },
      budget);
  return sum + comp;
}

FriableSums friable_sums(double x, double y, const PrimeTable& pt, std::uint64_t budget) {
  FriableSums sums;
  enumerate_friable(
      x, y, pt,
      [&](const Factorization& m) {
        const arith::DivisorLogSet divisors(m);
        ++sums.psi;
        sums.sum_delta += arith::delta(divisors);
        sums.sum_tau += divisors.size();
      },
      budget);
  return sums;
}

double mean_value_S(double x, double y, const PrimeTable& pt, std::uint64_t budget) {
  const FriableSums sums = friable_sums(x, y, pt, budget);
  return sums.mean_value();
}

double t_d_sum(double x, double y, const Factorization& d, const PrimeTable& pt, std::uint64_t budget) {
  if (static_cast<double>(d.largest_prime()) > y) {
    throw InvalidArgument("t_d_sum: d = " + std::to_string(d.value()) + " is not y-friable");
  }
  std::vector<std::uint64_t> excluded;
  for (const auto& pp : d.factors()) excluded.push_back(pp.prime);
  // Histogram by Omega keeps the sum exact up to the final scaling.
  std::vector<std::uint64_t> by_omega;
  enumerate_friable(
      x, y, pt,
      [&](const Factorization& m) {
        const unsigned k = m.big_omega();
        if (k >= by_omega.size()) by_omega.resize(k + 1, 0);
        ++by_omega[k];
      },
      budget, excluded);
  double total = 0.0;
  for (std::size_t k = by_omega.size(); k-- > 0;) total += std::ldexp(static_cast<double>(by_omega[k]), -static_cast<int>(k));
  return total;
}

double t_sum_constant() {
  // log C = sum_p f(1/p), f(z) = log(1 - z)/2 - log(1 - z/2) = sum_{k>=2} c_k z^k
  // with c_k = (2^-k - 1/2) / k. Exact over p <= kCut, series with prime zeta
  // tails beyond.
  static const double value = [] {
    constexpr std::uint64_t kCut = 1000;
    const PrimeTable pt = sieve(kCut);
    double log_c = 0.0;
    for (std::uint64_t p : pt.primes()) {
      const double z = 1.0 / static_cast<double>(p);
      log_c += 0.5 * std::log1p(-z) - std::log1p(-0.5 * z);
    }
    for (int k = 2; k <= 12; ++k) {
      double head = 0.0;
      for (std::uint64_t p : pt.primes()) head += std::pow(static_cast<double>(p), -k);
      const double tail = prime_zeta(k) - head;
      log_c += (std::ldexp(1.0, -k) - 0.5) / k * tail;
    }
    return std::exp(log_c);
  }();
  return value;
}

Lemma21Quantities lemma21_quantities(const Factorization& d, double y) {
  if (!(y >= 2.0)) throw InvalidArgument("lemma21_quantities: y must be >= 2");
  Lemma21Quantities q{};
  q.kappa_y = std::pow(std::log(y), -0.4);
  q.q_d = 1.0;
  q.w_d = 1.0;
  q.theta_d = 0.0;
  for (const auto& pp : d.factors()) {
    const double p = static_cast<double>(pp.prime);
    const double p_pow = std::pow(p, 1.0 - q.kappa_y);
    q.q_d *= 1.0 - 0.5 / p;
    q.w_d *= 1.0 + 0.5 / p_pow;
    q.theta_d += std::log(p) / p_pow;
  }
  q.C = t_sum_constant();
  return q;
}

}  // namespace fdelta::friable
