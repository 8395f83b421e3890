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

#ifndef EWALK_EXCURSION_HPP_
#define EWALK_EXCURSION_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "ewalk/types.hpp"

namespace ewalk {

// Law of the exit time tau = tau_0 ^ tau_N of simple random walk from x.
struct ExitLawTable {
  std::int64_t N = 0;  // interval actually used (effective if the input was infinite)
  std::int64_t x = 0;
  std::vector<double> pmf;      // pmf[n] = P_x(tau = n), n = 0..n_max
  double tail_remainder = 0.0;  // P_x(tau > n_max), the live interior mass
  double top_mass = 0.0;        // mass that exited through N up to n_max

  std::int64_t n_max() const { return static_cast<std::int64_t>(pmf.size()) - 1; }
};

// Forward iteration of the killed kernel, harvesting boundary mass each step.
// Infinite N uses the interval {0..x+n_max+1}, whose top end is out of reach.
ExitLawTable exit_pmf_dp(Length N, std::int64_t x, std::int64_t n_max,
                         const WorkBudget& budget = {});

// P_1(tau = n) and P_1(tau > n) from the cosine sums.
double exit_pmf_cosine(std::int64_t N, std::int64_t n);
double exit_tail_cosine(std::int64_t N, std::int64_t n);

// sum_{k=1}^{m} cos^n(pi (2k-1) / N)
double trig_sum_S0(std::int64_t N, std::int64_t m, std::int64_t n);

// One-sided exit time tau_0 from site 1.
double one_sided_pmf(std::int64_t n);
double one_sided_tail(std::int64_t n);
// P_x(tau_0 > n) for any x >= 0.
double one_sided_tail_from(std::int64_t x, std::int64_t n);

// P_x(tau_{0,N} > n), picking the cheapest exact route.
double exit_tail(Length N, std::int64_t x, std::int64_t n, const WorkBudget& budget = {});

// (mean, variance) of tau_{0,N} from x: x(N-x) and x(N-x)[x^2+(N-x)^2-2]/3.
std::pair<double, double> exit_moments(std::int64_t N, std::int64_t x);

// Mean and variance accumulated from a table (ignores the remainder).
std::pair<double, double> table_moments(const ExitLawTable& t);

struct TailExpansion {
  std::int64_t N = 0;
  std::int64_t k0 = 0;
  std::int64_t n = 0;
  double S0 = 0.0;
  double delta_bound = 0.0;
  double estimate = 0.0;  // (4/N) S0
  double lower = 0.0;
  double upper = 0.0;
  double exact = 0.0;     // exit_tail_cosine(N, n)
  bool contained = false; // exact inside [lower, upper]
};

// Truncated expansion of P_1(tau > n) with its error bound. Requires N >= 8.
TailExpansion tail_expansion(std::int64_t N, std::int64_t k0, std::int64_t n);

// (N/4) P_1(tau > floor(y N^2)); tends to H(y).
double tail_scaled_H(std::int64_t N, double y);

}  // namespace ewalk

#endif  // EWALK_EXCURSION_HPP_
