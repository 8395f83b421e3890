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
#include <complex>
#include <numbers>

#include "ewalk/campaigns.hpp"
#include "ewalk/lifetime.hpp"
#include "ewalk/limit_laws.hpp"

using namespace ewalk;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("script I and K") {
  CHECK(script_I(0.0) == 0.0);
  CHECK(kummer_K(0.0) == 1.0);
  for (int i = -5; i <= 5; ++i) {
    double t = i;
    CHECK(std::abs(script_I(t) - script_I_quadrature(t)) <= 1e-10 * std::max(1.0, std::abs(script_I(t))));
    CHECK(std::abs(std::exp(t) - script_I(t) - kummer_K(t)) <= 1e-10 * std::max(1.0, std::exp(t)));
  }
  double h = 1e-5;
  CHECK((kummer_K(h) - kummer_K(-h)) / (2 * h) == doctest::Approx(-1.0).epsilon(1e-6));
  double t0 = find_t0();
  CHECK(t0 == doctest::Approx(0.8540326566).epsilon(1e-8));
  CHECK(std::abs(kummer_K(t0)) <= 1e-11);
}

TEST_CASE("moment recursion") {
  auto v = dm_moments(6);
  REQUIRE(v.size() == 7);
  CHECK(v[0] == Rational(1));
  CHECK(v[1] == Rational(1));
  CHECK(v[2] == Rational(7, 3));
  CHECK(v[3] == Rational(41, 5));
  CHECK(v[4] == Rational(4033, 105));
  CHECK(v[5] == Rational(14167, 63));
  CHECK(v[6] == Rational(1824719, 1155));
  CHECK(dm_mgf(0.0) == 1.0);
  CHECK_THROWS_AS(dm_mgf(0.9), DomainError);

  // Taylor coefficients of 1/K from a Cauchy integral on |t| = 1/2.
  const int P = 128;
  const double r = 0.5;
  double fact = 1.0;
  for (int k = 0; k <= 4; ++k) {
    if (k > 0) fact *= k;
    std::complex<double> acc = 0.0;
    for (int j = 0; j < P; ++j) {
      std::complex<double> z = std::polar(r, 2 * kPi * j / P);
      acc += 1.0 / kummer_K_series(z) * std::pow(z, -k);
    }
    double coef = acc.real() / P;
    CHECK(coef == doctest::Approx(static_cast<double>(v[k]) / fact).epsilon(1e-8));
  }
}

TEST_CASE("half-stable law and the normal") {
  CHECK(stable_half_tail(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(stable_half_tail(1.0) == doctest::Approx(0.682689).epsilon(1e-6));
  double h = 1e-5;
  CHECK(-(stable_half_tail(1 + h) - stable_half_tail(1 - h)) / (2 * h) ==
        doctest::Approx(stable_half_density(1.0)).epsilon(1e-6));
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.3) + normal_sf(1.3) == doctest::Approx(1.0));
  CHECK(normal_pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2 * kPi)));
}

TEST_CASE("mean limit g") {
  for (double u : {0.1, 0.5, 1.0}) {
    CHECK(g_mean(0.0, u) == 2.0);
    CHECK(g_mean(1e-12, u) == doctest::Approx(2.0).epsilon(1e-5));
  }
  CHECK(g_mean(1e4, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(g_mean(INFINITY, 0.3) == 0.3);
  double h = 1e-5;
  for (double a = 0.1; a <= 10.0; a *= 1.6) {
    for (double u : {0.25, 0.5, 1.0}) {
      double fd = (g_mean(a + h, u) - g_mean(a - h, u)) / (2 * h);
      CHECK(std::abs(fd - g_mean_da(a, u)) <= 1e-6);
    }
  }
}

TEST_CASE("theta function H") {
  CHECK_THROWS_AS(theta_H(0.0), DomainError);
  for (double y : {0.02, 0.1, 0.25, 0.6, 1.5}) CHECK(theta_H_dual(y) == doctest::Approx(theta_H_direct(y)).epsilon(1e-12));
  double y = 1e-4;
  CHECK(2 * theta_H(y) * std::sqrt(2 * kPi * y) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(theta_H(3.0) / std::exp(-kPi * kPi * 1.5) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(theta_H_integral_inf() == doctest::Approx(0.25).epsilon(1e-6));
  double h = 1e-6;
  // The slope kernel is -y H'(y).
  CHECK(-0.7 * (theta_H(0.7 + h) - theta_H(0.7 - h)) / (2 * h) == doctest::Approx(theta_H_slope(0.7)).epsilon(1e-6));
  CHECK(-0.1 * (theta_H(0.1 + h) - theta_H(0.1 - h)) / (2 * h) == doctest::Approx(theta_H_slope(0.1)).epsilon(1e-6));
  CHECK(theta_H_integral(2.0) < 0.25);
  CHECK(theta_H_integral(2.0) > theta_H_integral(1.0));
}

TEST_CASE("critical regime quantities") {
  for (double rho : {0.1, 1.0, 10.0}) {
    CHECK(critical_G(rho, 0.0) == 0.0);
    CHECK(critical_mgf(rho, 0.0) == 1.0);
    double prev = -INFINITY;
    for (double s = -2.0; s <= 2.0; s += 0.25) {
      double g = critical_G(rho, s);
      CHECK(g > prev);
      prev = g;
    }
    double sr = critical_s_rho(rho);
    CHECK(critical_G(rho, sr) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(critical_mgf(rho, sr * 1.01 + 1e-9), DomainError);
  }
  CHECK(critical_mu(1e-3) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(critical_mu(4.0) * 4 * 4.0 * std::exp(-kPi * kPi * 2.0) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(critical_mu(0.25) < critical_mu(1.0));
  CHECK(critical_mu(1.0) < critical_mu(4.0));
  CHECK(std::abs(critical_dG_at_zero(1.0) - critical_mu(1.0)) <= 1e-6);
  CHECK(std::abs(levy_G(1.0, 0.5) - critical_G(1.0, 0.5)) <= 1e-6);
  for (double x = 0.01; x <= 1.0; x += 0.07) CHECK(levy_density_m(1.0, x) >= 0.0);
  CHECK(levy_density_m(1.0, -0.1) == 0.0);
  CHECK(levy_density_m(1.0, 1.1) == 0.0);
  auto c = make_critical(1.0);
  CHECK(c.mu == critical_mu(1.0));
}

TEST_CASE("confined scale") {
  CHECK(confined_scale(50, 0) == doctest::Approx(4.0 / 2500));
  CHECK(confined_scale_expform(100, 100000) / confined_scale(100, 100000) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(confined_scale(40, 100000) > 0.0);
  double th = extinction_prob(Length(20), 4000, 1, 4000);
  double ratio = th * 20 / (4 * std::pow(std::cos(kPi / 20), 4000));
  CHECK(ratio >= 0.98);
  CHECK(ratio <= 1.02);
}
