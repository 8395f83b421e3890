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

#ifndef EWALK_STATS_HPP_
#define EWALK_STATS_HPP_

#include <functional>
#include <span>
#include <vector>

namespace ewalk {

// Pairwise (cascade) summation; the result depends only on the input order.
double pairwise_sum(std::span<const double> v);
double mean(std::span<const double> v);
double variance(std::span<const double> v);  // unbiased
double standard_error(std::span<const double> v);

// sup_x |F_n(x) - F(x)| over the sorted sample. Throws DomainError if empty.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Asymptotic 95% critical value 1.358 / sqrt(n).
double ks_critical_95(std::size_t n);

}  // namespace ewalk

#endif  // EWALK_STATS_HPP_
