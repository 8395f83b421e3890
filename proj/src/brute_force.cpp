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

// Exact enumeration oracle. Every path of interior steps has probability
// 2^-(interior steps); counting with the boundary step weighted by 2 puts all
// masses at time d over the common denominator 2^d.

#include <cmath>
#include <vector>

#include "ewalk/lifetime.hpp"

namespace ewalk {

namespace {

class PathCounter {
 public:
  PathCounter(std::int64_t n, std::int64_t M, std::int64_t horizon)
      : n_(n), M_(M), h_(horizon),
        memo_(static_cast<std::size_t>((n + 1) * (M + 1) * (horizon + 1)), kUnset) {}

  // 2^d P(lambda = d | current state (x, e)).
  std::uint64_t count(std::int64_t x, std::int64_t e, std::int64_t d) {
    std::uint64_t& slot = memo_[static_cast<std::size_t>((x * (M_ + 1) + e) * (h_ + 1) + d)];
    if (slot != kUnset) return slot;
    std::uint64_t c;
    if (x == 0 || x == n_) {
      c = d == 0 ? 0 : 2 * count(x == 0 ? 1 : n_ - 1, M_, d - 1);
    } else if (e == 0) {
      c = d == 0 ? 1 : 0;
    } else {
      c = d == 0 ? 0 : count(x - 1, e - 1, d - 1) + count(x + 1, e - 1, d - 1);
    }
    slot = c;
    return c;
  }

 private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::int64_t n_, M_, h_;
  std::vector<std::uint64_t> memo_;
};

}  // namespace

BruteForceResult brute_force_pmf(const ModelParams& p, const WalkerState& start,
                                 std::int64_t horizon) {
  if (p.N.is_infinite() || p.N.value() > 6 || p.M > 6 || horizon > 40 || horizon < 0) {
    throw BudgetExceeded("brute_force_pmf: only N <= 6, M <= 6, horizon <= 40");
  }
  const std::int64_t n = p.N.value();
  validate_state(n, p.M, start);
  if (start.absorbed) throw DomainError("brute_force_pmf: start is absorbed");

  PathCounter pc(n, p.M, horizon);
  BruteForceResult r;
  r.law.provenance = "brute-force";
  std::uint64_t total = 0;  // sum of masses times 2^horizon
  for (std::int64_t d = 0; d <= horizon; ++d) {
    std::uint64_t c = pc.count(start.x, start.e, d);
    r.numerators.push_back(c);
    r.law.pmf.push_back(std::ldexp(static_cast<double>(c), static_cast<int>(-d)));
    total += c << (horizon - d);
  }
  std::uint64_t full = std::uint64_t{1} << horizon;
  r.law.residual = std::ldexp(static_cast<double>(full - total), static_cast<int>(-horizon));
  return r;
}

}  // namespace ewalk
