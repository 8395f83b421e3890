// Copyright 2026 The ewalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ewalk/excursion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace ewalk {

ExitLawTable exit_pmf_dp(Length N, std::int64_t x, std::int64_t n_max, const WorkBudget& budget) {
  if (n_max < 1) throw DomainError("exit_pmf_dp: need n_max >= 1");
  if (x < 0) throw DomainError("exit_pmf_dp: x < 0");
  const std::int64_t n = N.is_finite() ? N.value() : x + n_max + 1;
  if (n < 2) throw DomainError("exit_pmf_dp: need N >= 2");
  if (x > n) throw DomainError("exit_pmf_dp: x > N");

  ExitLawTable t;
  t.N = n;
  t.x = x;
  t.pmf.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0 || x == n) {
    t.pmf[0] = 1.0;
    if (x == n) t.top_mass = 1.0;
    return t;
  }
  const std::uint64_t width = static_cast<std::uint64_t>(std::min<std::int64_t>(n - 1, 2 * n_max + 1));
  budget.require(width * static_cast<std::uint64_t>(n_max), "exit_pmf_dp");
  budget.require_entries(static_cast<std::uint64_t>(n_max) + 1, "exit_pmf_dp");

  std::vector<double> cur(static_cast<std::size_t>(n) + 1, 0.0), nxt(cur.size(), 0.0);
  cur[x] = 1.0;
  std::int64_t lo = x, hi = x;  // support of cur within the interior
  for (std::int64_t step = 1; step <= n_max; ++step) {
    std::int64_t nlo = std::max<std::int64_t>(1, lo - 1);
    std::int64_t nhi = std::min<std::int64_t>(n - 1, hi + 1);
    for (std::int64_t i = nlo; i <= nhi; ++i) nxt[i] = 0.5 * (cur[i - 1] + cur[i + 1]);
    double out_low = (lo == 1) ? 0.5 * cur[1] : 0.0;
    double out_high = (hi == n - 1) ? 0.5 * cur[n - 1] : 0.0;
    t.pmf[step] = out_low + out_high;
    t.top_mass += out_high;
    for (std::int64_t i = lo; i <= hi; ++i) cur[i] = 0.0;
    std::swap(cur, nxt);
    lo = nlo;
    hi = nhi;
  }
  double live = 0.0;
  for (std::int64_t i = lo; i <= hi; ++i) live += cur[i];
  t.tail_remainder = live;
  return t;
}

double trig_sum_S0(std::int64_t N, std::int64_t m, std::int64_t n) {
  double s = 0.0;
  for (std::int64_t k = 1; k <= m; ++k) {
    double c = std::cos(std::numbers::pi * static_cast<double>(2 * k - 1) / static_cast<double>(N));
    s += std::pow(c, static_cast<double>(n));
  }
  return s;
}

namespace {
std::int64_t m_of(std::int64_t N) { return N / 2; }  // ceil((N-1)/2)
}  // namespace

double exit_pmf_cosine(std::int64_t N, std::int64_t n) {
  if (N < 2 || n < 1) throw DomainError("exit_pmf_cosine: need N >= 2, n >= 1");
  double s = 0.0;
  for (std::int64_t k = 1; k <= m_of(N); ++k) {
    double a = std::numbers::pi * static_cast<double>(2 * k - 1) / static_cast<double>(N);
    double sn = std::sin(a);
    s += std::pow(std::cos(a), static_cast<double>(n - 1)) * sn * sn;
  }
  return 2.0 / static_cast<double>(N) * s;
}

double exit_tail_cosine(std::int64_t N, std::int64_t n) {
  if (N < 2 || n < 0) throw DomainError("exit_tail_cosine: need N >= 2, n >= 0");
  if (n == 0) return 1.0;
  // S0(n) + S0(n+1) summed termwise as (1 + c) c^n, which avoids cancelling
  // the k near N/2 terms against each other.
  double s = 0.0;
  for (std::int64_t k = 1; k <= m_of(N); ++k) {
    double c = std::cos(std::numbers::pi * static_cast<double>(2 * k - 1) / static_cast<double>(N));
    s += (1.0 + c) * std::pow(c, static_cast<double>(n));
  }
  return 2.0 / static_cast<double>(N) * s;
}

namespace {
// 2^{-2m} C(2m, m)
double central_ratio(std::int64_t m) {
  if (m == 0) return 1.0;
  return boost::math::tgamma_delta_ratio(static_cast<double>(m) + 0.5, 0.5) /
         std::sqrt(std::numbers::pi);
}
}  // namespace

double one_sided_pmf(std::int64_t n) {
  if (n < 0) throw DomainError("one_sided_pmf: n < 0");
  if (n % 2 == 0) return 0.0;
  std::int64_t m = (n - 1) / 2;
  return central_ratio(m) / (2.0 * static_cast<double>(m + 1));
}

double one_sided_tail(std::int64_t n) {
  if (n < 0) throw DomainError("one_sided_tail: n < 0");
  return central_ratio((n + 1) / 2);
}

double one_sided_tail_from(std::int64_t x, std::int64_t n) {
  if (x < 0 || n < 0) throw DomainError("one_sided_tail_from: negative argument");
  if (x == 0) return 0.0;
  if (n == 0 || x > n) return 1.0;
  if (x == 1) return one_sided_tail(n);
  // Reflection: P_x(tau_0 > n) = P(-x < S_n <= x), S_n = 2B - n, B ~ Bin(n, 1/2).
  boost::math::binomial_distribution<double> b(static_cast<double>(n), 0.5);
  std::int64_t hi = (n + x) / 2;        // B <= hi
  std::int64_t lo_excl = n - x;         // 2B > n - x
  std::int64_t lo = lo_excl >= 0 ? lo_excl / 2 : -1;  // B > lo
  hi = std::min(hi, n);
  if (hi - lo <= 64) {
    double s = 0.0;
    for (std::int64_t k = std::max<std::int64_t>(lo + 1, 0); k <= hi; ++k)
      s += boost::math::pdf(b, static_cast<double>(k));
    return s;
  }
  double lower = lo >= 0 ? boost::math::cdf(b, static_cast<double>(lo)) : 0.0;
  return boost::math::cdf(b, static_cast<double>(hi)) - lower;
}

double exit_tail(Length N, std::int64_t x, std::int64_t n, const WorkBudget& budget) {
  if (n < 0) throw DomainError("exit_tail: n < 0");
  if (N.is_infinite() || N.value() - x > n) return one_sided_tail_from(x, n);
  const std::int64_t nn = N.value();
  if (x <= 0 || x >= nn) return 0.0;
  if (x == 1 || x == nn - 1) return exit_tail_cosine(nn, n);
  if (n == 0) return 1.0;
  return exit_pmf_dp(N, x, n, budget).tail_remainder;
}

std::pair<double, double> exit_moments(std::int64_t N, std::int64_t x) {
  if (x < 0 || x > N) throw DomainError("exit_moments: x outside [0, N]");
  double a = static_cast<double>(x), b = static_cast<double>(N - x);
  double mean = a * b;
  double var = a * b / 3.0 * (a * a + b * b - 2.0);
  return {mean, var};
}

std::pair<double, double> table_moments(const ExitLawTable& t) {
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t n = 0; n < t.pmf.size(); ++n) {
    double v = static_cast<double>(n);
    m1 += v * t.pmf[n];
    m2 += v * v * t.pmf[n];
  }
  return {m1, m2 - m1 * m1};
}

TailExpansion tail_expansion(std::int64_t N, std::int64_t k0, std::int64_t n) {
  if (N < 8) throw DomainError("tail_expansion: need N >= 8");
  if (k0 < 1 || n < 1) throw DomainError("tail_expansion: need k0 >= 1, n >= 1");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double Nd = static_cast<double>(N), kd = static_cast<double>(k0), nd = static_cast<double>(n);
  TailExpansion r;
  r.N = N;
  r.k0 = k0;
  r.n = n;
  r.S0 = trig_sum_S0(N, k0, n);
  r.delta_bound = 4.0 * pi2 * kd * kd / (Nd * Nd) +
                  2.0 * (1.0 + Nd * Nd / (4.0 * pi2 * nd * kd)) *
                      std::exp(-2.0 * pi2 * nd * kd * kd / (Nd * Nd));
  r.estimate = 4.0 / Nd * r.S0;
  r.lower = r.estimate * (1.0 - r.delta_bound);
  r.upper = r.estimate * (1.0 + r.delta_bound);
  r.exact = exit_tail_cosine(N, n);
  r.contained = r.exact >= r.lower && r.exact <= r.upper;
  return r;
}

double tail_scaled_H(std::int64_t N, double y) {
  if (!(y > 0.0)) throw DomainError("tail_scaled_H: need y > 0");
  double Nd = static_cast<double>(N);
  auto n = static_cast<std::int64_t>(std::floor(y * Nd * Nd));
  return Nd / 4.0 * exit_tail_cosine(N, n);
}

}  // namespace ewalk
