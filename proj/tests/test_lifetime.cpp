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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "ewalk/excursion.hpp"
#include "ewalk/lifetime.hpp"
#include "ewalk/limit_laws.hpp"
#include "ewalk/walk_model.hpp"

using namespace ewalk;

namespace {

// Expected absorption time from the fundamental matrix of the finite chain.
// Transient states: interior (x, e) with e >= 1, plus the two boundary sites.
double fundamental_mean(std::int64_t N, std::int64_t M, std::int64_t x0, std::int64_t y0) {
  const std::int64_t W = N - 1;
  auto id = [&](std::int64_t x, std::int64_t e) -> std::int64_t {
    if (x == 0) return W * M;
    if (x == N) return W * M + 1;
    if (e == 0) return -1;
    return (x - 1) * M + (e - 1);
  };
  const std::int64_t n = W * M + 2;
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
  for (std::int64_t x = 1; x < N; ++x) {
    for (std::int64_t e = 1; e <= M; ++e) {
      for (std::int64_t d : {-1, 1}) {
        std::int64_t j = id(x + d, e - 1);
        if (j >= 0) A(id(x, e), j) -= 0.5;
      }
    }
  }
  A(id(0, 0), id(1, M)) -= 1.0;
  A(id(N, 0), id(N - 1, M)) -= 1.0;
  Eigen::VectorXd t = A.partialPivLu().solve(Eigen::VectorXd::Ones(n));
  return t(id(x0, y0));
}

}  // namespace

TEST_CASE("extinction probability") {
  CHECK(extinction_prob(Length(3), 2, 1, 2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(extinction_prob(Length(40), 10, 3, 10) == doctest::Approx(one_sided_tail_from(3, 10)).epsilon(1e-13));
  double th = extinction_prob(Length::infinite(), 10000, 1, 10000);
  CHECK(std::sqrt(1e4) * th / std::sqrt(2.0 / std::numbers::pi) == doctest::Approx(1.0).epsilon(0.02));
  CHECK_THROWS_AS(extinction_prob(Length(5), 3, 0, 2), DomainError);
  CHECK_THROWS_AS(extinction_prob(Length(5), 3, 2, 4), DomainError);
}

TEST_CASE("excursion law") {
  auto l = excursion_law(Length(3), 2);
  CHECK(l.theta == doctest::Approx(0.25));
  REQUIRE(l.durations.mass.size() >= 4);
  CHECK(l.durations.mass[1] == 0.0);
  CHECK(l.durations.mass[2] == doctest::Approx(0.5));
  CHECK(l.durations.mass[3] == doctest::Approx(0.25));
  CHECK(l.durations.defect == doctest::Approx(0.25));

  for (auto [N, M] : {std::pair{5, 7}, std::pair{12, 30}, std::pair{4, 1}}) {
    auto k = excursion_law(Length(N), M);
    CHECK(static_cast<std::int64_t>(k.durations.mass.size()) - 1 <= M + 1);
    CHECK(k.durations.total() + k.theta == doctest::Approx(1.0).epsilon(1e-13));
  }
  // Durations include the entry step, so the conditional mean tracks N and nu - 1 tracks N - 1.
  double cm = excursion_law(Length(10), 300).conditional_mean();
  CHECK(cm == doctest::Approx(10.0).epsilon(0.05));
  CHECK(cm - 1.0 == doctest::Approx(9.0).epsilon(0.05));
}

TEST_CASE("lifetime DP on small chains") {
  auto d = lifetime_pmf_dp(ModelParams(Length(3), 1), WalkerState{1, 1, false}, 61);
  for (int k = 0; k <= 30; ++k) {
    CHECK(d.pmf[2 * k + 1] == doctest::Approx(std::ldexp(1.0, -(k + 1))).epsilon(1e-15));
    CHECK(d.pmf[2 * k] == 0.0);
  }
  double s = d.residual;
  for (double p : d.pmf) s += p;
  CHECK(s == doctest::Approx(1.0).epsilon(1e-12));

  auto deep = lifetime_pmf_dp(ModelParams(Length(30), 5), WalkerState{15, 5, false}, 40);
  CHECK(deep.pmf[5] == 1.0);

  ModelParams p(Length(4), 2);
  WalkerState z{1, 2, false};
  auto bf = brute_force_pmf(p, z, 40);
  auto dp = lifetime_pmf_dp(p, z, 40);
  for (int t = 0; t <= 40; ++t) CHECK(std::abs(bf.law.pmf[t] - dp.pmf[t]) <= 1e-15);

  CHECK(block_survival_bound(3, 0) == 1.0);
  CHECK(dp.residual <= block_survival_bound(2, 40));
}

TEST_CASE("brute force oracle") {
  auto a = brute_force_pmf(ModelParams(Length(3), 1), WalkerState{1, 1, false}, 21);
  CHECK(a.law.pmf[1] == 0.5);
  CHECK(a.law.pmf[3] == 0.25);
  CHECK(a.law.provenance == "brute-force");
  auto b = brute_force_pmf(ModelParams(Length(3), 2), WalkerState{1, 2, false}, 40);
  CHECK(b.law.pmf[2] == 0.25);
  double total = b.law.residual;
  for (double p : b.law.pmf) total += p;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(brute_force_pmf(ModelParams(Length(7), 2), WalkerState{1, 2, false}, 20), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_pmf(ModelParams(Length(4), 7), WalkerState{1, 2, false}, 20), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_pmf(ModelParams(Length(4), 2), WalkerState{1, 2, false}, 41), BudgetExceeded);
}

TEST_CASE("three-way agreement with brute force") {
  for (std::int64_t N = 3; N <= 5; ++N)
    for (std::int64_t M = 1; M <= 4; ++M)
      for (std::int64_t x = 0; x <= N; ++x)
        for (std::int64_t e : {std::int64_t{1}, M}) {
          bool bnd = x == 0 || x == N;
          WalkerState z{x, bnd ? 0 : e, false};
          ModelParams p(Length(N), M);
          auto bf = brute_force_pmf(p, z, 30);
          auto dp = lifetime_pmf_dp(p, z, 30);
          double tv = 0.0;
          for (int t = 0; t <= 30; ++t) tv += std::abs(bf.law.pmf[t] - dp.pmf[t]);
          CHECK(tv <= 1e-14);
        }
}

TEST_CASE("exact expected lifetime") {
  CHECK(expected_lifetime_exact(ModelParams(Length(3), 1), WalkerState{1, 1, false}) ==
        doctest::Approx(3.0).epsilon(1e-14));

  for (auto [N, M] : {std::pair{3, 1}, std::pair{4, 3}, std::pair{6, 6}, std::pair{9, 12}, std::pair{12, 8}}) {
    for (std::int64_t x = 0; x <= N; ++x) {
      for (std::int64_t y : {std::int64_t{1}, std::int64_t{(M + 1) / 2}, std::int64_t{M}}) {
        bool bnd = x == 0 || x == N;
        if (bnd && y != M) continue;
        double want = fundamental_mean(N, M, x, bnd ? 0 : y);
        double got = expected_lifetime_exact(ModelParams(Length(N), M), WalkerState{x, bnd ? 0 : y, false});
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
      }
    }
  }

  for (auto [N, M] : {std::pair{3, 8}, std::pair{5, 20}, std::pair{10, 60}, std::pair{20, 200}, std::pair{14, 3}}) {
    ModelParams p(Length(N), M);
    WalkerState z{1, M, false};
    auto law = lifetime_pmf_dp_converged(p, z);
    double m = 0.0;
    for (std::size_t t = 0; t < law.pmf.size(); ++t) m += static_cast<double>(t) * law.pmf[t];
    CHECK(m == doctest::Approx(expected_lifetime_exact(p, z)).epsilon(1e-8));
  }

  for (std::int64_t N : {3, 8, 20}) {
    double prev = 0.0;
    for (std::int64_t M = 1; M <= 400; M += (M < 20 ? 1 : 19)) {
      double e = expected_lifetime_exact(ModelParams(Length(N), M), WalkerState{1, M, false});
      CHECK(e > prev);
      prev = e;
    }
  }

  double r = expected_lifetime_exact(ModelParams(Length(200), 400), WalkerState{1, 400, false}) / 400.0;
  CHECK(r == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("renewal reconstruction matches the DP") {
  for (auto [N, M] : {std::pair{4, 3}, std::pair{7, 20}, std::pair{10, 50}}) {
    ModelParams p(Length(N), M);
    WalkerState z{1, M, false};
    auto a = lifetime_pmf_renewal(p, z, 3000);
    auto b = lifetime_pmf_dp(p, z, 3000);
    double tv = std::abs(a.residual - b.residual);
    for (int t = 0; t <= 3000; ++t) tv += std::abs(a.pmf[t] - b.pmf[t]);
    CHECK(tv <= 1e-10);
    CHECK(a.provenance == "renewal");
  }
}

TEST_CASE("compound generating function") {
  CHECK(compound_mgf(Length(10), 40, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  for (double s : {-0.001, -0.1, -3.0}) {
    double v = compound_mgf(Length(10), 40, s);
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
  double v = compound_mgf(Length::infinite(), 500, -1.0 / 500.0);
  CHECK(v == doctest::Approx(1.0 / kummer_K(-1.0)).epsilon(0.03));
  CHECK_THROWS_AS(compound_mgf(Length(10), 40, 5.0), DomainError);
}

TEST_CASE("geometric excursion count in simulation") {
  ModelParams p(Length(4), 3);
  WalkerState z{2, 3, false};
  double thz = extinction_prob(Length(4), 3, 2, 3);
  double th = excursion_law(Length(4), 3).theta;
  const int runs = 100000;
  auto s = simulate_batch(p, z, runs, 2024);
  for (int k = 1; k <= 10; ++k) {
    int c = 0;
    for (const auto& r : s) c += r.kappa >= static_cast<std::uint64_t>(k);
    double q = (1 - thz) * std::pow(1 - th, k - 1);
    double sd = std::sqrt(q * (1 - q) / runs);
    CHECK(std::abs(c / static_cast<double>(runs) - q) <= 4 * sd);
  }
}
