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

#ifndef EWALK_SAMPLER_HPP_
#define EWALK_SAMPLER_HPP_

#include <cstdint>
#include <vector>

#include "ewalk/lifetime.hpp"
#include "ewalk/rng.hpp"
#include "ewalk/walk_model.hpp"

namespace ewalk {

// Inverse-CDF sampler over {0..size-1} for a normalized pmf.
class TableSampler {
 public:
  explicit TableSampler(const std::vector<double>& pmf);
  std::uint64_t operator()(CounterRng& rng) const;

 private:
  std::vector<double> cdf_;
};

// Number of successes before the first failure when failures have chance p:
// P(K >= k) = (1 - p)^k.
std::uint64_t sample_geometric(double p, CounterRng& rng);

// Samples lambda exactly from the renewal structure: the first excursion,
// a geometric count of further excursions, and table draws for each.
class RenewalSampler {
 public:
  RenewalSampler(const ModelParams& p, const WalkerState& start, const WorkBudget& budget = {});

  std::uint64_t operator()(CounterRng& rng) const;
  std::vector<double> batch(std::uint64_t n_runs, std::uint64_t seed_root, unsigned threads) const;

  const ExcursionLaw& law() const { return law_; }
  double first_defect() const { return first_defect_; }
  // Expected number of table draws per sample.
  double expected_draws() const { return (1.0 - law_.theta) / law_.theta; }

 private:
  std::int64_t M_;
  std::int64_t kappa0_lambda_;
  ExcursionLaw law_;
  double first_defect_;
  TableSampler first_;
  TableSampler rest_;
};

// Geometric-count sum with i.i.d. table draws: sum_{i=1}^{K} Y_i with
// P(K >= k) = (1 - p)^k.
double sample_geometric_sum(double p, const TableSampler& y, CounterRng& rng);

}  // namespace ewalk

#endif  // EWALK_SAMPLER_HPP_
