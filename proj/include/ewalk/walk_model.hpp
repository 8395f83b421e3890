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

#ifndef EWALK_WALK_MODEL_HPP_
#define EWALK_WALK_MODEL_HPP_

#include <cstdint>
#include <vector>

#include "ewalk/types.hpp"

namespace ewalk {

// The (N, M) pair. N = 2 is rejected: extinction is not certain there.
struct ModelParams {
  Length N;
  std::int64_t M;

  ModelParams(Length n, std::int64_t m) : N(n), M(m) {
    if (N.is_finite() && N.value() < 3) throw DomainError("ModelParams: need N >= 3");
    if (M < 1) throw DomainError("ModelParams: need M >= 1");
  }

  // Interval actually simulated from start site x0. On the half-line the walker
  // cannot pass M + x0, so M + x0 + 2 is exact.
  std::int64_t effective_N(std::int64_t x0) const {
    return N.is_finite() ? N.value() : M + x0 + 2;
  }
};

struct WalkerState {
  std::int64_t x = 1;
  std::int64_t e = 0;
  bool absorbed = false;
};

// Checks 0 <= x <= n, 0 <= e <= M and the absorbed flag; throws DomainError.
void validate_state(std::int64_t n, std::int64_t M, const WalkerState& s);

// One step of the chain on {0..n}. `coin()` returns a fair bool.
template <typename Coin>
WalkerState transition_step(std::int64_t n, std::int64_t M, WalkerState s, Coin&& coin) {
  if (s.x == 0 || s.x == n) {
    s.x = (s.x == 0) ? 1 : n - 1;
    s.e = M;
    s.absorbed = false;
    return s;
  }
  if (s.e == 0) {
    s.absorbed = true;
    return s;
  }
  s.x += coin() ? 1 : -1;
  --s.e;
  s.absorbed = (s.e == 0 && s.x != 0 && s.x != n);
  return s;
}

template <typename Coin>
WalkerState transition_step(const ModelParams& p, WalkerState s, Coin&& coin) {
  return transition_step(p.effective_N(s.x), p.M, s, coin);
}

struct LifetimeSample {
  std::uint64_t lambda = 0;
  std::uint64_t kappa = 0;
  std::vector<std::uint32_t> excursions;  // nu_1..nu_kappa
  std::int64_t extinction_x = 0;
  std::uint64_t seed = 0;
};

struct SimulationOptions {
  std::uint64_t max_steps = 10'000'000'000ULL;
  bool keep_excursions = true;
};

// One lifetime from `start`. Throws HorizonExceeded (run index 0) past max_steps
// and DomainError for an absorbed or out-of-range start.
LifetimeSample simulate_lifetime(const ModelParams& p, const WalkerState& start,
                                 std::uint64_t seed, const SimulationOptions& opt = {});

// n_runs lifetimes with seeds derive_seed(seed_root, i). Identical for any
// thread count. HorizonExceeded carries the lowest failing run index.
std::vector<LifetimeSample> simulate_batch(const ModelParams& p, const WalkerState& start,
                                           std::uint64_t n_runs, std::uint64_t seed_root,
                                           const SimulationOptions& opt = {},
                                           unsigned threads = 1);

}  // namespace ewalk

#endif  // EWALK_WALK_MODEL_HPP_
