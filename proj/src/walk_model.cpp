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

#include "ewalk/walk_model.hpp"

#include <string>

#include "ewalk/parallel.hpp"
#include "ewalk/rng.hpp"

namespace ewalk {

void validate_state(std::int64_t n, std::int64_t M, const WalkerState& s) {
  if (s.x < 0 || s.x > n) throw DomainError("state: x out of range");
  if (s.e < 0 || s.e > M) throw DomainError("state: e out of range");
  bool interior = s.x != 0 && s.x != n;
  if (s.absorbed != (interior && s.e == 0)) throw DomainError("state: inconsistent absorbed flag");
}

LifetimeSample simulate_lifetime(const ModelParams& p, const WalkerState& start,
                                 std::uint64_t seed, const SimulationOptions& opt) {
  const std::int64_t n = p.effective_N(start.x);
  const std::int64_t M = p.M;
  validate_state(n, M, start);
  if (start.absorbed) throw DomainError("simulate_lifetime: start is already absorbed");

  CounterRng rng(seed);
  LifetimeSample out;
  out.seed = seed;

  std::int64_t x = start.x;
  std::int64_t e = start.e;
  std::uint64_t t = 0;
  std::uint64_t last_visit = 0;  // sigma_kappa so far; sigma_0 = 0
  const bool boundary_start = (x == 0 || x == n);

  for (;;) {
    if (x == 0 || x == n) {
      if (t > 0) {
        ++out.kappa;
        if (opt.keep_excursions) out.excursions.push_back(static_cast<std::uint32_t>(t - last_visit));
        last_visit = t;
      }
      x = (x == 0) ? 1 : n - 1;
      e = M;
    } else if (e == 0) {
      break;
    } else {
      x += rng.bit() ? 1 : -1;
      --e;
    }
    if (++t > opt.max_steps) {
      throw HorizonExceeded("simulate_lifetime: no extinction within " +
                                std::to_string(opt.max_steps) + " steps",
                            0);
    }
  }
  out.lambda = t;
  out.extinction_x = x;

  std::uint64_t expect;
  if (out.kappa >= 1 || boundary_start) {
    expect = static_cast<std::uint64_t>(M) + 1 + last_visit;
  } else {
    expect = static_cast<std::uint64_t>(start.e);
  }
  if (out.lambda != expect) throw Error("simulate_lifetime: lifetime bookkeeping mismatch");
  return out;
}

std::vector<LifetimeSample> simulate_batch(const ModelParams& p, const WalkerState& start,
                                           std::uint64_t n_runs, std::uint64_t seed_root,
                                           const SimulationOptions& opt, unsigned threads) {
  if (n_runs < 1) throw DomainError("simulate_batch: need n_runs >= 1");
  std::vector<LifetimeSample> out(n_runs);
  parallel_for(n_runs, threads, [&](std::size_t i) {
    try {
      out[i] = simulate_lifetime(p, start, derive_seed(seed_root, i), opt);
    } catch (const HorizonExceeded& ex) {
      throw HorizonExceeded(std::string(ex.what()) + " (run " + std::to_string(i) + ")", i);
    }
  });
  return out;
}

}  // namespace ewalk
