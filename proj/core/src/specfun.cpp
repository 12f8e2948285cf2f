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

#include "fdelta/specfun.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "fdelta/error.hpp"
#include "fdelta/quadrature.hpp"

namespace fdelta::specfun {
namespace {

// (e^z - 1 - z) / z, the left side of the root equation after removing the
// trivial root z = 0: xi(t) solves excess(z) = t - 1.
double excess(double z) {
  if (z < 0.5) {
    double term = z / 2.0, sum = 0.0;
    for (int k = 2; k < 30 && term > 1e-18 * sum; ++k) {
      sum += term;
      term *= z / (k + 1);
    }
    return sum;
  }
  return (std::expm1(z) - z) / z;
}

double excess_prime(double z) {
  if (z < 0.5) {
    // sum_{k>=2} (k-1) z^(k-2) / k!
    double power = 1.0, fact = 2.0, sum = 0.0;
    for (int k = 2; k < 32; ++k) {
      const double term = (k - 1) * power / fact;
      sum += term;
      if (term < 1e-18 * sum) break;
      power *= z;
      fact *= k + 1;
    }
    return sum;
  }
  return ((z - 1.0) * std::exp(z) + 1.0) / (z * z);
}

std::string format17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

double xi(double t) {
  if (!(t >= 1.0)) throw DomainError("xi: requires t >= 1, got " + format17(t));
  if (t == 1.0) return 0.0;
  if (std::isinf(t)) return t;
  const double target = t - 1.0;
  const double lt = std::log(t);
  double lo = std::max(0.0, lt);
  double hi = lt + std::log1p(lt) + 1.0;
  while (excess(hi) < target) hi *= 2.0;
  // excess is increasing and convex, so Newton from the right stays in the
  // bracket except for rounding; bisect if it ever leaves.
  double z = hi;
  for (int iter = 0; iter < 60; ++iter) {
    const double f = excess(z) - target;
    if (f > 0) {
      hi = z;
    } else {
      lo = z;
    }
    double next = z - f / excess_prime(z);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - z) <= 4.0 * std::numeric_limits<double>::epsilon() * z) return next;
    z = next;
  }
  throw ConvergenceError("xi: Newton iteration did not converge for t = " + format17(t));
}

double xi_prime(double t) {
  if (!(t > 1.0)) throw DomainError("xi_prime: requires t > 1, got " + format17(t));
  const double x = xi(t);
  return x / (1.0 + t * x - t);
}

double xi_integral(double t) {
  if (!(t >= 1.0)) throw DomainError("xi_integral: requires t >= 1");
  if (t == 1.0) return 0.0;
  // Panels on a geometric grid keep each panel's relative variation small.
  const int pieces = std::max(1, static_cast<int>(std::ceil(std::log2(t))));
  // The integral is below t xi(t); the tolerance scales with it.
  const double tol = std::max(1e-12, 1e-13 * t * xi(t));
  double sum = 0.0;
  double lo = 1.0;
  const double ratio = std::pow(t, 1.0 / pieces);
  for (int i = 0; i < pieces; ++i) {
    const double hi = (i + 1 == pieces) ? t : lo * ratio;
    sum += quadrature::adaptive_simpson([](double s) { return xi(s); }, lo, hi, tol / pieces);
    lo = hi;
  }
  return sum;
}

double rho_closed_form(double kappa, double v) {
  if (!(kappa > 0.0)) throw DomainError("rho: kappa must be > 0");
  if (v < 0.0) return 0.0;
  if (v == 0.0) {
    if (kappa < 1.0) return std::numeric_limits<double>::infinity();
    return kappa == 1.0 ? 1.0 : 0.0;
  }
  if (v > 2.0) throw DomainError("rho_closed_form: v must be <= 2");
  const double inv_gamma = 1.0 / std::tgamma(kappa);
  if (v <= 1.0) return std::pow(v, kappa - 1.0) * inv_gamma;
  // int_1^v t^-kappa (t-1)^(kappa-1) dt = sum_n W^(n+kappa) / (n+kappa), W = 1 - 1/v <= 1/2.
  const double w = 1.0 - 1.0 / v;
  double power = std::pow(w, kappa);
  double series = 0.0;
  for (int n = 0; n < 200; ++n) {
    const double term = power / (n + kappa);
    series += term;
    if (term <= 1e-18 * series) break;
    power *= w;
  }
  return std::pow(v, kappa - 1.0) * inv_gamma * (1.0 - kappa * series);
}

RhoTable rho_table(double kappa, double v_max, double step) {
  if (!(kappa > 0.0)) throw DomainError("rho_table: kappa must be > 0");
  if (!(v_max >= 1.0)) throw InvalidArgument("rho_table: v_max must be >= 1");
  if (!(step > 0.0) || step > 1.0 / 256.0) throw InvalidArgument("rho_table: step must lie in (0, 2^-8]");
  const double per_unit = 1.0 / step;
  const auto N = static_cast<std::size_t>(std::llround(per_unit));
  if (std::abs(per_unit - static_cast<double>(N)) > 1e-9 * per_unit) {
    throw InvalidArgument("rho_table: 1/step must be an integer");
  }
  const double h = 1.0 / static_cast<double>(N);
  const auto M = static_cast<std::size_t>(std::floor(v_max * static_cast<double>(N) + 1e-9));
  std::vector<double> values(M + 1);
  auto grid = [&](std::size_t i) { return static_cast<double>(i) * h; };

  for (std::size_t i = 0; i <= std::min(M, 2 * N); ++i) values[i] = rho_closed_form(kappa, grid(i));
  if (M <= 2 * N) return RhoTable(kappa, h, v_max, std::move(values));

  // For v >= 1, v rho(v) = kappa int_{v-1}^v rho(t) dt; the constant of
  // integration is pinned to 0, which keeps errors relative as rho decays.
  // cells[j] approximates the integral of rho over [jh, (j+1)h].
  std::vector<double> cells(M, 0.0);
  for (std::size_t j = N; j < 2 * N; ++j) {
    const double a = grid(j);
    if (j == N) {
      // t = 1 + h s^2 absorbs the (t-1)^kappa term of rho at 1+.
      cells[j] = quadrature::gauss_legendre8(
          [&](double s) { return rho_closed_form(kappa, a + h * s * s) * 2.0 * h * s; }, 0.0, 1.0);
    } else {
      cells[j] = quadrature::gauss_legendre8([&](double t) { return rho_closed_form(kappa, t); }, a, a + h);
    }
  }
  // window = sum of cells[i - N .. i - 2] for the value being solved at i.
  auto window_sum = [&](std::size_t i) {
    double sum = 0.0;
    for (std::size_t j = i - 1; j-- > i - N;) sum += cells[j];
    return sum;
  };
  constexpr std::size_t kResync = 32;
  double window = 0.0;
  for (std::size_t i = 2 * N + 1; i <= M; ++i) {
    if ((i - 2 * N - 1) % kResync == 0) {
      window = window_sum(i);
    } else {
      window += cells[i - 2] - cells[i - N - 1];
    }
    // Trapezoid on the newest cell makes the update implicit in values[i].
    const double v = grid(i);
    values[i] = kappa * (window + 0.5 * h * values[i - 1]) / (v - 0.5 * kappa * h);
    cells[i - 1] = 0.5 * h * (values[i - 1] + values[i]);
  }
  return RhoTable(kappa, h, v_max, std::move(values));
}

double RhoTable::operator()(double v) const {
  if (v < 0.0) return 0.0;
  if (v <= 2.0) return rho_closed_form(kappa_, v);
  const double last = static_cast<double>(values_.size() - 1) * step_;
  if (v > last * (1.0 + 1e-12)) {
    throw DomainError("RhoTable: v = " + format17(v) + " beyond the table range " + format17(last));
  }
  const auto N = static_cast<std::size_t>(std::llround(1.0 / step_));
  const std::size_t M = values_.size() - 1;
  const auto i = static_cast<std::size_t>(std::floor(v / step_));
  // Four-point Lagrange stencil kept inside [2, v_max].
  std::size_t s = i >= 1 ? i - 1 : 0;
  const std::size_t hi = M - 3;
  s = std::clamp(s, std::min(2 * N, hi), hi);
  double result = 0.0;
  for (std::size_t a = s; a < s + 4; ++a) {
    double w = 1.0;
    for (std::size_t b = s; b < s + 4; ++b) {
      if (a != b) w *= (v - static_cast<double>(b) * step_) / (static_cast<double>(a) - static_cast<double>(b)) / step_;
    }
    result += w * values_[a];
  }
  return result;
}

void RhoTable::write_csv(std::ostream& out) const {
  out << "kappa,step,v_max\n" << format17(kappa_) << ',' << format17(step_) << ',' << format17(v_max_) << '\n';
  out << "v,value\n";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out << format17(static_cast<double>(i) * step_) << ',' << format17(values_[i]) << '\n';
  }
}

RhoTable RhoTable::read_csv(std::istream& in) {
  auto parse = [](const std::string& field) {
    double v = 0.0;
    if (field == "inf") return std::numeric_limits<double>::infinity();
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      throw InvalidArgument("RhoTable CSV: bad number '" + field + "'");
    }
    return v;
  };
  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    return fields;
  };
  std::string line;
  if (!std::getline(in, line) || line != "kappa,step,v_max") throw InvalidArgument("RhoTable CSV: missing header");
  if (!std::getline(in, line)) throw InvalidArgument("RhoTable CSV: missing parameters");
  const auto params = split(line);
  if (params.size() != 3) throw InvalidArgument("RhoTable CSV: expected kappa,step,v_max");
  const double kappa = parse(params[0]);
  const double step = parse(params[1]);
  const double v_max = parse(params[2]);
  if (!std::getline(in, line) || line != "v,value") throw InvalidArgument("RhoTable CSV: missing row header");
  std::vector<double> values;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto row = split(line);
    if (row.size() != 2) throw InvalidArgument("RhoTable CSV: bad row '" + line + "'");
    const double v = parse(row[0]);
    if (std::abs(v - static_cast<double>(values.size()) * step) > 1e-9) {
      throw InvalidArgument("RhoTable CSV: rows are not on the declared grid");
    }
    values.push_back(parse(row[1]));
  }
  if (values.empty()) throw InvalidArgument("RhoTable CSV: no rows");
  return RhoTable(kappa, step, v_max, std::move(values));
}

double rho_kappa_asymptotic(double kappa, double v) {
  if (!(kappa > 0.0)) throw DomainError("rho_kappa_asymptotic: kappa must be > 0");
  if (!(v >= 1.0 + kappa)) throw DomainError("rho_kappa_asymptotic: requires v >= 1 + kappa");
  const double t = v / kappa;
  const double prefactor = std::sqrt(xi_prime(t) / (2.0 * std::numbers::pi * kappa));
  return prefactor * std::exp(kappa * kEulerGamma - kappa * xi_integral(t));
}

double frak_r(double u, const RhoTable& rho1, const RhoTable& rho2) {
  if (!(u >= 1.0)) throw DomainError("frak_r: requires u >= 1");
  if (rho1.kappa() != 1.0 || rho2.kappa() != 2.0) throw InvalidArgument("frak_r: expects the kappa = 1 and 2 tables");
  return rho2(u) / (std::sqrt(u) * rho1(u));
}

double rho_convolution(const RhoTable& f, const RhoTable& g, double v, double tol) {
  if (!(v > 0.0)) throw DomainError("rho_convolution: v must be > 0");
  std::vector<double> cuts{0.0, 0.5 * v, v};
  for (double k = 1.0; k < v; k += 1.0) {
    cuts.push_back(k);
    cuts.push_back(v - k);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return std::abs(a - b) < 1e-14; }),
             cuts.end());
  auto integrand = [&](double t) { return f(t) * g(v - t); };
  double total = 0.0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double a = cuts[c];
    const double len = cuts[c + 1] - a;
    if (len <= 0.0) continue;
    // t = a + len (3s^2 - 2s^3) flattens both ends, which tames the
    // t^(kappa-1) singularities and the (t - k)^kappa kinks.
    auto mapped = [&](double s) {
      const double t = a + len * s * s * (3.0 - 2.0 * s);
      return integrand(t) * 6.0 * len * s * (1.0 - s);
    };
    auto composite = [&](int panels) {
      double sum = 0.0;
      for (int p = 0; p < panels; ++p) {
        sum += quadrature::gauss_legendre8(mapped, static_cast<double>(p) / panels, static_cast<double>(p + 1) / panels);
      }
      return sum;
    };
    int panels = 4;
    double coarse = composite(panels);
    for (;;) {
      panels *= 2;
      const double fine = composite(panels);
      if (std::abs(fine - coarse) <= tol || panels >= 4096) {
        total += fine;
        break;
      }
      coarse = fine;
    }
  }
  return total;
}

double g_func(double t) {
  if (!(t > 0.0)) throw DomainError("g_func: requires t > 0");
  // (1+2t)^2 / (4t(1+t)) = 1 + 1/(4t(1+t)), so no large terms cancel.
  return t * std::log1p(1.0 / (4.0 * t * (1.0 + t))) + std::log1p(t / (1.0 + t));
}

double h_func(double t) {
  if (!(t > 0.0)) throw DomainError("h_func: requires t > 0");
  if (t < 1.0) return t * std::log(4.0) - (1.0 + 2.0 * t) * std::log1p(t / (1.0 + t));
  // Same value with log((1+2t)/(1+t)) = log 2 + log1p(-1/(2+2t)); avoids
  // cancelling two O(t) terms.
  return -std::numbers::ln2 - (1.0 + 2.0 * t) * std::log1p(-0.5 / (1.0 + t));
}

}  // namespace fdelta::specfun
