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
#include <numbers>

#include "ewalk/excursion.hpp"
#include "ewalk/limit_laws.hpp"

using namespace ewalk;

TEST_CASE("exit law on the two-site interval is geometric") {
  auto t = exit_pmf_dp(Length(3), 1, 60);
  CHECK(t.pmf[0] == 0.0);
  for (int n = 1; n <= 60; ++n) CHECK(t.pmf[n] == doctest::Approx(std::ldexp(1.0, -n)).epsilon(1e-15));
}

TEST_CASE("exit law from the middle of N = 4") {
  auto t = exit_pmf_dp(Length(4), 2, 10);
  CHECK(t.pmf[1] == 0.0);
  CHECK(t.pmf[2] == 0.5);
  CHECK(t.pmf[4] == 0.25);
  auto b = exit_pmf_dp(Length(9), 0, 5);
  CHECK(b.pmf[0] == 1.0);
  CHECK(b.tail_remainder == 0.0);
}

TEST_CASE("exit tables are normalised and split by gambler's ruin") {
  for (std::int64_t N = 3; N <= 25; ++N) {
    for (std::int64_t x = 1; x < N; ++x) {
      auto t = exit_pmf_dp(Length(N), x, 40 * N * N);
      double s = t.tail_remainder;
      for (double p : t.pmf) s += p;
      CHECK(std::abs(s - 1.0) <= 1e-12);
      CHECK(std::abs(t.top_mass - static_cast<double>(x) / N) <= 1e-12 + t.tail_remainder);
    }
  }
  CHECK_THROWS_AS(exit_pmf_dp(Length(3), 4, 10), DomainError);
  WorkBudget tiny;
  tiny.max_work = 1000;
  CHECK_THROWS_AS(exit_pmf_dp(Length(100), 1, 1000, tiny), BudgetExceeded);
}

TEST_CASE("cosine formula") {
  CHECK(exit_pmf_cosine(4, 1) == doctest::Approx(0.5).epsilon(1e-15));
  for (std::int64_t N : {4, 6, 10, 30})
    for (std::int64_t n = 2; n <= 40; n += 2) CHECK(std::abs(exit_pmf_cosine(N, n)) <= 1e-15);
  for (std::int64_t N = 3; N <= 50; ++N) {
    auto t = exit_pmf_dp(Length(N), 1, 500);
    double worst = 0.0;
    for (std::int64_t n = 1; n <= 500; ++n) worst = std::max(worst, std::abs(exit_pmf_cosine(N, n) - t.pmf[n]));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("cosine tail") {
  CHECK(exit_tail_cosine(7, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(exit_tail_cosine(3, 2) == doctest::Approx(0.25).epsilon(1e-14));
  auto t = exit_pmf_dp(Length(30), 1, 2000);
  double cum = 0.0, worst = 0.0;
  for (std::int64_t n = 0; n <= 2000; ++n) {
    cum += t.pmf[n];
    worst = std::max(worst, std::abs(exit_tail_cosine(30, n) - (1.0 - cum)));
  }
  CHECK(worst <= 1e-12);
  CHECK(exit_tail(Length(30), 1, 700) == doctest::Approx(exit_tail_cosine(30, 700)).epsilon(1e-10));
}

TEST_CASE("one-sided exit") {
  CHECK(one_sided_pmf(1) == 0.5);
  CHECK(one_sided_pmf(2) == 0.0);
  CHECK(one_sided_pmf(3) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(one_sided_tail(2) == doctest::Approx(0.5).epsilon(1e-15));
  // Large arguments stay finite and decay like sqrt(2 / (pi n)).
  double n = 1e8;
  CHECK(one_sided_tail(static_cast<std::int64_t>(n)) * std::sqrt(std::numbers::pi * n / 2) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // Infinite interval agrees with the one-sided law.
  auto t = exit_pmf_dp(Length::infinite(), 1, 201);
  for (int k = 1; k <= 201; ++k) CHECK(t.pmf[k] == doctest::Approx(one_sided_pmf(k)).epsilon(1e-12));
  CHECK(exit_tail(Length::infinite(), 3, 50) == doctest::Approx(one_sided_tail_from(3, 50)).epsilon(1e-12));
}

TEST_CASE("exit moments") {
  auto [m1, v1] = exit_moments(10, 1);
  CHECK(m1 == 9.0);
  auto [m2, v2] = exit_moments(4, 2);
  CHECK(v2 == 8.0);
  auto [m0, v0] = exit_moments(10, 0);
  CHECK(m0 == 0.0);
  CHECK(v0 == 0.0);
  (void)v1;
  (void)m2;
  for (std::int64_t N : {5, 12}) {
    for (std::int64_t x = 1; x < N; ++x) {
      auto t = exit_pmf_dp(Length(N), x, 200 * N * N);
      auto [dm, dv] = table_moments(t);
      auto [em, ev] = exit_moments(N, x);
      CHECK(dm == doctest::Approx(em).epsilon(1e-10));
      CHECK(dv == doctest::Approx(ev).epsilon(1e-9));
    }
  }
}

TEST_CASE("truncated tail expansion") {
  CHECK_THROWS_AS(tail_expansion(7, 1, 100), DomainError);
  auto e = tail_expansion(50, 1, 5000);
  CHECK(e.contained);
  CHECK(e.lower <= e.exact);
  CHECK(e.exact <= e.upper);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  double want = 4 * pi2 / 1e4 + 2 * (1 + 1e4 / (4 * pi2 * 1e4)) * std::exp(-2 * pi2);
  CHECK(tail_expansion(100, 1, 10000).delta_bound == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("scaled tail approaches the theta function") {
  CHECK(tail_scaled_H(100, 1.0) == doctest::Approx(theta_H(1.0)).epsilon(0.02));
  CHECK(tail_scaled_H(200, 0.25) == doctest::Approx(theta_H(0.25)).epsilon(0.02));
  for (double y : {0.1, 0.5, 1.0}) {
    double a = std::abs(tail_scaled_H(50, y) - theta_H(y));
    double b = std::abs(tail_scaled_H(100, y) - theta_H(y));
    CHECK(b < a);
  }
}

TEST_CASE("trigonometric sum") {
  // Full sum at m = ceil((N-1)/2) reproduces the tail identity.
  for (std::int64_t N : {9, 20}) {
    std::int64_t m = N / 2;
    for (std::int64_t n : {3, 40, 300}) {
      double lhs = 2.0 / N * (trig_sum_S0(N, m, n) + trig_sum_S0(N, m, n + 1));
      CHECK(lhs == doctest::Approx(exit_tail_cosine(N, n)).epsilon(1e-12));
    }
  }
}
