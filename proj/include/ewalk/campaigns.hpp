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

#ifndef EWALK_CAMPAIGNS_HPP_
#define EWALK_CAMPAIGNS_HPP_

#include <cstdint>

#include "ewalk/config.hpp"
#include "ewalk/report.hpp"

namespace ewalk {

// Campaigns take a config that has been through apply_defaults().
RegimeReport run_meagre(const ExperimentConfig& c);
RegimeReport run_confined(const ExperimentConfig& c);
RegimeReport run_critical(const ExperimentConfig& c);
RegimeReport sweep_phase_diagram(const ExperimentConfig& c);
RegimeReport run_validate(const ExperimentConfig& c);

// Dispatches on c.regime.
RegimeReport run_campaign(const ExperimentConfig& c);

// Building blocks shared by the validate campaign and the acceptance suite.

// max over N in [3, n_max], M in [1, m_max] and every live start of the total
// variation between the enumeration and the rectangle DP up to `horizon`.
double max_tv_brute_vs_dp(std::int64_t n_max, std::int64_t m_max, std::int64_t horizon);

// max |cosine pmf - DP pmf| for x = 1, N in [n_lo, n_hi], n <= t_max.
double max_cosine_vs_dp(std::int64_t n_lo, std::int64_t n_hi, std::int64_t t_max);

// max relative error of DP mean and variance against the closed forms, N <= n_max.
double max_moment_rel_error(std::int64_t n_max);

// max TV between renewal reconstruction and DP, start (1, M), N in [3, n_max],
// M in [1, m_max], over {0..horizon} plus the residual mass.
double max_tv_renewal_vs_dp(std::int64_t n_max, std::int64_t m_max, std::int64_t horizon);

// max over k <= k_max of |P_hat(kappa >= k) - (1-theta_z)(1-theta)^{k-1}| / sd.
double kappa_geometric_max_z(std::int64_t N, std::int64_t M, std::uint64_t runs,
                             std::uint64_t seed_root, int k_max, unsigned threads);

// d/ds G(rho, s) at 0 by Richardson-extrapolated central differences.
double critical_dG_at_zero(double rho);

}  // namespace ewalk

#endif  // EWALK_CAMPAIGNS_HPP_
