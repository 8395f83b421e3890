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

#include "ewalk/stats.hpp"

#include <algorithm>
#include <cmath>

#include "ewalk/types.hpp"

namespace ewalk {

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

double mean(std::span<const double> v) {
  if (v.empty()) throw DomainError("mean: empty sample");
  return pairwise_sum(v) / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
  if (v.size() < 2) throw DomainError("variance: need two or more samples");
  double m = mean(v);
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = (v[i] - m) * (v[i] - m);
  return pairwise_sum(d) / static_cast<double>(v.size() - 1);
}

double standard_error(std::span<const double> v) {
  return std::sqrt(variance(v) / static_cast<double>(v.size()));
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_critical_95(std::size_t n) { return 1.358 / std::sqrt(static_cast<double>(n)); }

}  // namespace ewalk
