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

#include "ewalk/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "ewalk/parallel.hpp"

namespace ewalk {

TableSampler::TableSampler(const std::vector<double>& pmf) : cdf_(pmf.size()) {
  double s = 0.0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    s += pmf[i];
    cdf_[i] = s;
  }
  if (!(s > 0.0)) throw DomainError("TableSampler: empty pmf");
  for (double& c : cdf_) c /= s;
  cdf_.back() = 1.0;
}

std::uint64_t TableSampler::operator()(CounterRng& rng) const {
  double u = rng.uniform();
  return static_cast<std::uint64_t>(std::upper_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin());
}

std::uint64_t sample_geometric(double p, CounterRng& rng) {
  if (!(p > 0.0) || p > 1.0) throw DomainError("sample_geometric: need 0 < p <= 1");
  if (p == 1.0) return 0;
  return static_cast<std::uint64_t>(std::floor(std::log(rng.uniform_pos()) / std::log1p(-p)));
}

namespace {
std::vector<double> normalized(const DefectivePmf& d) {
  std::vector<double> out = d.mass;
  double z = d.total();
  if (!(z > 0.0)) out.assign(2, 0.5);  // never sampled when the defect is 1
  else for (double& v : out) v /= z;
  return out;
}
}  // namespace

RenewalSampler::RenewalSampler(const ModelParams& p, const WalkerState& start, const WorkBudget& budget)
    : M_(p.M),
      kappa0_lambda_(0),
      law_(excursion_law(p.N, p.M, budget)),
      first_defect_(0.0),
      first_(std::vector<double>{1.0}),
      rest_(law_.conditional_pmf()) {
  DefectivePmf first = first_excursion_law(p, start, budget);
  first_defect_ = first.defect;
  first_ = TableSampler(normalized(first));
  const std::int64_t n = p.effective_N(start.x);
  kappa0_lambda_ = (start.x == 0 || start.x == n) ? p.M + 1 : start.e;
}

std::uint64_t RenewalSampler::operator()(CounterRng& rng) const {
  if (rng.uniform() < first_defect_) return static_cast<std::uint64_t>(kappa0_lambda_);
  std::uint64_t sigma = first_(rng);
  std::uint64_t k = sample_geometric(law_.theta, rng);
  for (std::uint64_t i = 0; i < k; ++i) sigma += rest_(rng);
  return static_cast<std::uint64_t>(M_) + 1 + sigma;
}

std::vector<double> RenewalSampler::batch(std::uint64_t n_runs, std::uint64_t seed_root,
                                          unsigned threads) const {
  std::vector<double> out(n_runs);
  parallel_for(n_runs, threads, [&](std::size_t i) {
    CounterRng rng(derive_seed(seed_root, i));
    out[i] = static_cast<double>((*this)(rng));
  });
  return out;
}

double sample_geometric_sum(double p, const TableSampler& y, CounterRng& rng) {
  std::uint64_t k = sample_geometric(p, rng);
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i < k; ++i) s += y(rng);
  return static_cast<double>(s);
}

}  // namespace ewalk
