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

#ifndef EWALK_LIMIT_LAWS_HPP_
#define EWALK_LIMIT_LAWS_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ewalk/types.hpp"

namespace ewalk {

using Rational = boost::multiprecision::cpp_rational;

// I(t) = sum_{l>=1} 2l t^l / ((2l-1) l!)
double script_I(double t);
// Same quantity as t * int_0^1 2 e^{t v^2} dv (u = v^2 removes the u^{-1/2}).
double script_I_quadrature(double t);

// Power series of K(t) = 1 - sum_{l>=1} t^l / ((2l-1) l!). Works for complex
// arguments; intended for moderate |t|.
template <typename T>
T kummer_K_series(T t) {
  T sum(1.0);
  T pow_over_fact(1.0);
  for (int l = 1; l < 400; ++l) {
    pow_over_fact *= t / static_cast<double>(l);
    T term = pow_over_fact / static_cast<double>(2 * l - 1);
    sum -= term;
    if (l > 2.0 * std::abs(t) && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// K(t), using Kummer's transformation for t < 0 so no term cancels.
double kummer_K(double t);

// Unique positive root of K.
double find_t0();

// 1 / K(t) for t < t0.
double dm_mgf(double t);

// upsilon_0..upsilon_kmax, exact.
std::vector<Rational> dm_moments(int k_max);

struct DmDistribution {
  double t0;
  std::vector<Rational> moments;
};
DmDistribution make_dm(int k_max);

// Positive 1/2-stable law: hitting time of level 1 by Brownian motion.
double stable_half_tail(double t);
double stable_half_density(double t);

double normal_cdf(double z);
double normal_sf(double z);
double normal_pdf(double z);

// Mean of min(u, a tau) + (1 + xi) 1{a tau < u}; a may be +infinity.
double g_mean(double a, double u);
double g_mean_da(double a, double u);

// H(y) = sum_k exp(-pi^2 (2k-1)^2 y / 2), y > 0.
double theta_H(double y);
double theta_H_direct(double y);
double theta_H_dual(double y);  // Poisson-summed form, fast for small y
// -y H'(y)
double theta_H_slope(double y);
// int_0^{y_hi} H(y) dy
double theta_H_integral(double y_hi);
// int_0^infinity H, computed as the integral to 10 plus a bound on the rest.
double theta_H_integral_inf();

double critical_G(double rho, double s);
double critical_s_rho(double rho);
double critical_mgf(double rho, double s);
double critical_mu(double rho);
// m_rho(x); +infinity at x = 0, zero outside [0, 1].
double levy_density_m(double rho, double x);
// int_0^1 (e^{sx} - 1) m_rho(x) / x dx
double levy_G(double rho, double s);

struct CriticalLaw {
  double rho;
  double s_rho;
  double mu;
};
CriticalLaw make_critical(double rho);

// (4/N^2) cos^M(pi/N), and the same with cos^M replaced by exp(-pi^2 M / (2N^2)).
double confined_scale(std::int64_t N, std::int64_t M);
double confined_scale_expform(std::int64_t N, std::int64_t M);

}  // namespace ewalk

#endif  // EWALK_LIMIT_LAWS_HPP_
