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

#ifndef EWALK_LIFETIME_HPP_
#define EWALK_LIFETIME_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewalk/types.hpp"
#include "ewalk/walk_model.hpp"

namespace ewalk {

// Mass function over {0..size-1} that sums to 1 - defect.
struct DefectivePmf {
  std::vector<double> mass;
  double defect = 0.0;

  double total() const;
  double mean_restricted() const;  // E[X 1{X < inf}]
};

// Law of one excursion nu = 1 + tau' from a boundary re-entry at (1, M).
// theta is the chance the excursion ends in extinction.
struct ExcursionLaw {
  DefectivePmf durations;  // support within {2..M+1}
  double theta = 0.0;

  double conditional_mean() const;
  double conditional_variance() const;
  std::vector<double> conditional_pmf() const;
};

struct LifetimeLaw {
  std::vector<double> pmf;     // pmf[n] = P(lambda = n), n = 0..horizon
  double residual = 0.0;       // P(lambda > horizon)
  std::optional<double> mean;  // exact mean when known
  std::string provenance;      // "dp", "renewal" or "brute-force"
};

// theta_z = P_x(tau_{0,N} > y): the walker at (x, y) dies before the boundary.
double extinction_prob(Length N, std::int64_t M, std::int64_t x, std::int64_t y,
                       const WorkBudget& budget = {});

ExcursionLaw excursion_law(Length N, std::int64_t M, const WorkBudget& budget = {});

// Law of nu_1 from `start`. From the interior it is tau from x0 cut at y0;
// from the boundary it is the ordinary excursion law.
DefectivePmf first_excursion_law(const ModelParams& p, const WalkerState& start,
                                 const WorkBudget& budget = {});

// Exact forward iteration of the chain over the rectangle up to `horizon`.
LifetimeLaw lifetime_pmf_dp(const ModelParams& p, const WalkerState& start,
                            std::int64_t horizon, const WorkBudget& budget = {});

// Same, extended until the residual falls below tol.
LifetimeLaw lifetime_pmf_dp_converged(const ModelParams& p, const WalkerState& start,
                                      double tol = 1e-14, const WorkBudget& budget = {});

// Survival bound over t steps: (1 - 2^-M)^floor(t / (M + 1)).
double block_survival_bound(std::int64_t M, std::int64_t t);

// PMF of lambda from the delayed renewal decomposition.
LifetimeLaw lifetime_pmf_renewal(const ModelParams& p, const WalkerState& start,
                                 std::int64_t horizon, const WorkBudget& budget = {});

double expected_lifetime_exact(const ModelParams& p, const WalkerState& start,
                               const WorkBudget& budget = {});

// E exp(s sigma_kappa) for the chain restarted at the boundary:
// theta / (1 - sum_n e^{sn} P(nu = n)). Throws DomainError off the domain.
double compound_mgf(Length N, std::int64_t M, double s, const WorkBudget& budget = {});
double compound_mgf(const ExcursionLaw& law, double s);

// Exact enumeration for tiny chains (N <= 6, M <= 6, horizon <= 40).
// numerators[n] / 2^n = P(lambda = n).
struct BruteForceResult {
  LifetimeLaw law;
  std::vector<std::uint64_t> numerators;
};
BruteForceResult brute_force_pmf(const ModelParams& p, const WalkerState& start,
                                 std::int64_t horizon);

}  // namespace ewalk

#endif  // EWALK_LIFETIME_HPP_
