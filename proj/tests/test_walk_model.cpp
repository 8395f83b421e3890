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

#include <doctest.h>

#include <cmath>
#include <map>

#include "ewalk/lifetime.hpp"
#include "ewalk/rng.hpp"
#include "ewalk/walk_model.hpp"

using namespace ewalk;

TEST_CASE("model parameters") {
  CHECK_THROWS_AS(ModelParams(Length(2), 3), DomainError);
  CHECK_THROWS_AS(ModelParams(Length(5), 0), DomainError);
  ModelParams inf(Length::infinite(), 10);
  CHECK(inf.effective_N(3) == 15);
  CHECK(ModelParams(Length(7), 10).effective_N(3) == 7);
  CHECK(Length::parse("inf").is_infinite());
  CHECK(Length::parse("12").value() == 12);
  CHECK_THROWS_AS(Length::parse("twelve"), ConfigError);
}

TEST_CASE("transition rules") {
  ModelParams p(Length(5), 3);
  auto never = [] { return false; };
  WalkerState b = transition_step(p, WalkerState{0, 0, false}, never);
  CHECK(b.x == 1);
  CHECK(b.e == 3);
  CHECK_FALSE(b.absorbed);
  WalkerState top = transition_step(p, WalkerState{5, 2, false}, never);
  CHECK(top.x == 4);
  CHECK(top.e == 3);
  WalkerState dead = transition_step(p, WalkerState{2, 0, true}, never);
  CHECK(dead.x == 2);
  CHECK(dead.e == 0);
  CHECK(dead.absorbed);

  CounterRng rng(99);
  const int n = 100000;
  int up = 0;
  for (int i = 0; i < n; ++i) {
    WalkerState s = transition_step(p, WalkerState{2, 2, false}, [&] { return rng.bit(); });
    CHECK(s.e == 1);
    CHECK((s.x == 1 || s.x == 3));
    up += s.x == 3;
  }
  double sd = std::sqrt(0.25 / n);
  CHECK(std::abs(static_cast<double>(up) / n - 0.5) <= 3.0 * sd);
}

TEST_CASE("two-site chain lifetime law") {
  // N = 3, M = 1 from (1,1): P(lambda = 2k+1) = 2^-(k+1).
  ModelParams p(Length(3), 1);
  auto s = simulate_batch(p, WalkerState{1, 1, false}, 100000, 5);
  std::map<std::uint64_t, int> counts;
  double sum = 0.0;
  for (const auto& x : s) {
    counts[x.lambda]++;
    sum += static_cast<double>(x.lambda);
    CHECK(x.lambda % 2 == 1);
  }
  for (int k = 0; k < 6; ++k) {
    double q = std::ldexp(1.0, -(k + 1));
    double ph = counts[2 * k + 1] / 1e5;
    CHECK(std::abs(ph - q) <= 4.0 * std::sqrt(q * (1 - q) / 1e5));
  }
  // Var(lambda) = 8 for this law.
  CHECK(std::abs(sum / 1e5 - 3.0) <= 4.0 * std::sqrt(8.0 / 1e5));
}

TEST_CASE("death before the boundary") {
  ModelParams p(Length(3), 2);
  auto s = simulate_batch(p, WalkerState{1, 2, false}, 100000, 17);
  int k0 = 0;
  for (const auto& x : s) k0 += x.kappa == 0;
  CHECK(std::abs(k0 / 1e5 - 0.25) <= 4.0 * std::sqrt(0.25 * 0.75 / 1e5));
}

TEST_CASE("per-run invariants") {
  for (std::int64_t N : {3, 4, 7}) {
    for (std::int64_t M : {1, 3, 6}) {
      ModelParams p(Length(N), M);
      for (std::int64_t x = 0; x <= N; ++x) {
        std::int64_t e = (x == 0 || x == N) ? 0 : M;
        auto s = simulate_batch(p, WalkerState{x, e, false}, 2000, 3);
        for (const auto& r : s) {
          CHECK(r.lambda >= static_cast<std::uint64_t>(e == 0 ? M + 1 : e));
          CHECK(r.excursions.size() == r.kappa);
          std::uint64_t sigma = 0;
          for (auto v : r.excursions) {
            CHECK(v >= 1);
            CHECK(v <= static_cast<std::uint32_t>(M + 1));
            sigma += v;
          }
          if (r.kappa >= 1 || x == 0 || x == N) CHECK(r.lambda == static_cast<std::uint64_t>(M) + 1 + sigma);
          else CHECK(r.lambda == static_cast<std::uint64_t>(e));
          CHECK(r.extinction_x > 0);
          CHECK(r.extinction_x < N);
        }
      }
    }
  }
}

TEST_CASE("starting with full energy at site 1 lives at least M steps") {
  ModelParams p(Length::infinite(), 40);
  for (const auto& r : simulate_batch(p, WalkerState{1, 40, false}, 1000, 8)) CHECK(r.lambda >= 40);
}

TEST_CASE("batch determinism and errors") {
  ModelParams p(Length(6), 5);
  WalkerState z{2, 3, false};
  auto a = simulate_batch(p, z, 500, 42, {}, 1);
  auto b = simulate_batch(p, z, 500, 42, {}, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].lambda == b[i].lambda);
    CHECK(a[i].excursions == b[i].excursions);
    CHECK(a[i].seed == b[i].seed);
  }
  auto one = simulate_batch(p, z, 1, 42);
  CHECK(one[0].lambda == simulate_lifetime(p, z, derive_seed(42, 0)).lambda);

  CHECK_THROWS_AS(simulate_lifetime(p, WalkerState{2, 0, true}, 1), DomainError);
  CHECK_THROWS_AS(simulate_batch(p, z, 0, 1), DomainError);

  SimulationOptions tight;
  tight.max_steps = 5;
  try {
    simulate_batch(ModelParams(Length(40), 30), WalkerState{20, 30, false}, 10, 1, tight, 3);
    FAIL("expected HorizonExceeded");
  } catch (const HorizonExceeded& e) {
    CHECK(e.run_index() == 0);
  }
}

TEST_CASE("monte carlo agrees with the exact law on small chains") {
  // Empirical PMF of lambda within 4-sigma bands of the enumeration.
  for (auto [N, M, x, e] : {std::tuple{4, 3, 1, 3}, std::tuple{5, 4, 2, 2}, std::tuple{3, 2, 0, 0}}) {
    ModelParams p(Length(N), M);
    WalkerState z{x, e, false};
    const int runs = 100000;
    auto s = simulate_batch(p, z, runs, 77);
    auto bf = brute_force_pmf(p, z, 40);
    std::vector<int> c(41, 0);
    for (const auto& r : s)
      if (r.lambda <= 40) c[r.lambda]++;
    for (int t = 0; t <= 40; ++t) {
      double q = bf.law.pmf[t];
      double sd = std::sqrt(std::max(q * (1 - q), 1e-12) / runs);
      CHECK(std::abs(c[t] / static_cast<double>(runs) - q) <= 4.0 * sd + 1e-9);
    }
  }
}
