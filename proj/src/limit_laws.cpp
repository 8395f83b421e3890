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

#include "ewalk/limit_laws.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace ewalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi2 = kPi * kPi / 2.0;

template <typename F>
double integrate(F f, double a, double b, double tol = 1e-12) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 20, tol, &err);
}

}  // namespace

double script_I(double t) {
  double sum = 0.0;
  double pow_over_fact = 1.0;
  for (int l = 1; l < 2000; ++l) {
    pow_over_fact *= t / l;
    double term = 2.0 * l / (2.0 * l - 1.0) * pow_over_fact;
    sum += term;
    // Past l = 2|t| successive ratios are below 1/2, so the rest is under 2|term|.
    if (l > 2.0 * std::abs(t) && 2.0 * std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

double script_I_quadrature(double t) {
  return t * integrate([t](double v) { return 2.0 * std::exp(t * v * v); }, 0.0, 1.0);
}

double kummer_K(double t) {
  if (t >= 0.0) return kummer_K_series(t);
  // K(t) = e^t sum_{l>=0} |t|^l / (1/2)_l, all terms positive.
  const double a = -t;
  double sum = 1.0, term = 1.0, log_scale = 0.0;
  for (int l = 1; l < 100000; ++l) {
    term *= a / (l - 0.5);
    sum += term;
    if (sum > 1e280) {
      sum *= 1e-280;
      term *= 1e-280;
      log_scale += 280.0 * std::numbers::ln10;
    }
    if (l > 2.0 * a && term < 1e-18 * sum) break;
  }
  return std::exp(t + log_scale + std::log(sum));
}

double find_t0() {
  auto r = boost::math::tools::bisect([](double t) { return kummer_K(t); }, 0.5, 1.0,
                                      boost::math::tools::eps_tolerance<double>(50));
  return 0.5 * (r.first + r.second);
}

double dm_mgf(double t) {
  static const double t0 = find_t0();
  if (t >= t0) throw DomainError("dm_mgf: need t < t0");
  return 1.0 / kummer_K(t);
}

std::vector<Rational> dm_moments(int k_max) {
  if (k_max < 1) throw DomainError("dm_moments: need k_max >= 1");
  std::vector<Rational> ups(static_cast<std::size_t>(k_max) + 1);
  ups[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    Rational s = 0;
    boost::multiprecision::cpp_int binom = 1;  // C(k, j)
    for (int j = 1; j <= k; ++j) {
      binom = binom * (k - j + 1) / j;
      s += Rational(binom) * ups[k - j] / Rational(2 * j - 1);
    }
    ups[k] = s;
  }
  return ups;
}

DmDistribution make_dm(int k_max) { return {find_t0(), dm_moments(k_max)}; }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }
double normal_sf(double z) { return 0.5 * std::erfc(z / std::numbers::sqrt2); }
double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi); }

double stable_half_tail(double t) {
  if (!(t > 0.0)) throw DomainError("stable_half_tail: need t > 0");
  return std::erf(1.0 / std::sqrt(2.0 * t));
}

double stable_half_density(double t) {
  if (!(t > 0.0)) throw DomainError("stable_half_density: need t > 0");
  return std::exp(-1.0 / (2.0 * t)) / std::sqrt(2.0 * kPi * t * t * t);
}

double g_mean(double a, double u) {
  if (a < 0.0 || !(u > 0.0) || u > 1.0) throw DomainError("g_mean: need a >= 0, 0 < u <= 1");
  if (std::isinf(a)) return u;
  if (a == 0.0) return 2.0;
  double z = std::sqrt(a / u);
  return u + (4.0 - 2.0 * u - 2.0 * a) * normal_sf(z) +
         std::sqrt(2.0 * a * u / kPi) * std::exp(-a / (2.0 * u));
}

double g_mean_da(double a, double u) {
  if (!(a > 0.0) || !(u > 0.0) || u > 1.0) throw DomainError("g_mean_da: need a > 0, 0 < u <= 1");
  double z = std::sqrt(a / u);
  return -2.0 * (1.0 - u) * normal_pdf(z) / std::sqrt(a * u) - 2.0 * normal_sf(z);
}

double theta_H_direct(double y) {
  if (!(y > 0.0)) throw DomainError("theta_H: need y > 0");
  double sum = 0.0;
  for (int k = 1;; ++k) {
    double j = 2.0 * k - 1.0;
    sum += std::exp(-kHalfPi2 * j * j * y);
    // Ratios h_{k+2}/h_{k+1} = exp(-4 pi^2 (k+1) y) shrink, so the tail is
    // at most h_{k+1} / (1 - exp(-4 pi^2 (k+1) y)).
    double next = std::exp(-kHalfPi2 * (j + 2.0) * (j + 2.0) * y);
    double rem = next / (-std::expm1(-4.0 * kPi * kPi * (k + 1) * y));
    if (rem < 1e-17 * sum || k > 1000000) break;
  }
  return sum;
}

double theta_H_dual(double y) {
  if (!(y > 0.0)) throw DomainError("theta_H: need y > 0");
  // Alternating with decreasing terms: the first omitted term bounds the rest.
  double s = 1.0;
  for (int k = 1;; ++k) {
    double term = 2.0 * std::exp(-static_cast<double>(k) * k / (2.0 * y));
    s += (k % 2 ? -term : term);
    if (term < 1e-17 || k > 1000000) break;
  }
  return s / std::sqrt(8.0 * kPi * y);
}

double theta_H(double y) { return y < 0.25 ? theta_H_dual(y) : theta_H_direct(y); }

double theta_H_slope(double y) {
  if (!(y > 0.0)) throw DomainError("theta_H_slope: need y > 0");
  if (y < 0.25) {
    double s = 0.0;
    for (int k = 1;; ++k) {
      double kk = static_cast<double>(k) * k / y;
      double term = kk * std::exp(-kk / 2.0);
      s += (k % 2 ? -term : term);
      if ((kk > 4.0 && term < 1e-17) || k > 1000000) break;
    }
    return 0.5 * theta_H_dual(y) - s / std::sqrt(8.0 * kPi * y);
  }
  double sum = 0.0;
  for (int k = 1;; ++k) {
    double j = 2.0 * k - 1.0;
    double c = kHalfPi2 * j * j * y;
    double term = c * std::exp(-c);
    sum += term;
    if ((c > 1.0 && term < 1e-18 * sum) || k > 1000000) break;
  }
  return sum;
}

double theta_H_integral(double y_hi) {
  if (y_hi < 0.0) throw DomainError("theta_H_integral: need y_hi >= 0");
  if (y_hi == 0.0) return 0.0;
  // y = w^2: the integrand 2w H(w^2) is bounded near w = 0.
  auto f = [](double w) { return w == 0.0 ? 2.0 / std::sqrt(8.0 * kPi) : 2.0 * w * theta_H(w * w); };
  double hi = std::sqrt(y_hi);
  double cut = std::min(hi, 1.0);
  double s = integrate(f, 0.0, cut);
  if (hi > cut) s += integrate(f, cut, hi);
  return s;
}

double theta_H_integral_inf() {
  const double Y = 10.0;
  // int_Y^inf h_k = 2 / (pi^2 (2k-1)^2) exp(-pi^2 (2k-1)^2 Y / 2); the k = 1 term dominates.
  double rest = 0.0;
  for (int k = 1; k < 50; ++k) {
    double j = 2.0 * k - 1.0;
    rest += 2.0 / (kPi * kPi * j * j) * std::exp(-kHalfPi2 * j * j * Y);
  }
  return theta_H_integral(Y) + rest;
}

double critical_G(double rho, double s) {
  if (!(rho > 0.0)) throw DomainError("critical_G: need rho > 0");
  if (s == 0.0) return 0.0;
  const double Hr = theta_H(rho);
  // v = w^2 turns the v^{-1/2} singularity of H(v rho) into a bounded integrand.
  auto f = [&](double w) {
    if (w == 0.0) return 2.0 / std::sqrt(8.0 * kPi * rho);
    double v = w * w;
    return std::exp(s * v) * (theta_H(v * rho) - Hr) * 2.0 * w;
  };
  return s / Hr * integrate(f, 0.0, 1.0);
}

double critical_s_rho(double rho) {
  // G(rho, .) is convex with slope mu at 0, so the root lies in (0, 1/mu].
  double hi = 1.0 / critical_mu(rho);
  while (critical_G(rho, hi) < 1.0) {
    hi *= 2.0;
    if (hi > 1e6) throw DomainError("critical_s_rho: no root below 1e6");
  }
  std::uintmax_t iters = 200;
  auto r = boost::math::tools::toms748_solve([rho](double s) { return critical_G(rho, s) - 1.0; }, 0.0,
                                             hi, -1.0, critical_G(rho, hi) - 1.0,
                                             boost::math::tools::eps_tolerance<double>(45), iters);
  return 0.5 * (r.first + r.second);
}

double critical_mgf(double rho, double s) {
  double g = critical_G(rho, s);
  if (!(g < 1.0)) throw DomainError("critical_mgf: need s < s_rho");
  return 1.0 / (1.0 - g);
}

double critical_mu(double rho) {
  if (!(rho > 0.0)) throw DomainError("critical_mu: need rho > 0");
  return theta_H_integral(rho) / (rho * theta_H(rho)) - 1.0;
}

double levy_density_m(double rho, double x) {
  if (!(rho > 0.0)) throw DomainError("levy_density_m: need rho > 0");
  if (x < 0.0 || x > 1.0) return 0.0;
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  return theta_H_slope(rho * x) / theta_H(rho);
}

double levy_G(double rho, double s) {
  // x = w^2; m_rho(w^2) ~ 1/w near 0, so (e^{s w^2} - 1)/w^2 * m * 2w stays bounded.
  auto f = [&](double w) {
    if (w == 0.0) return 2.0 * s / (2.0 * std::sqrt(8.0 * kPi * rho) * theta_H(rho));
    double x = w * w;
    return std::expm1(s * x) / x * levy_density_m(rho, x) * 2.0 * w;
  };
  return integrate(f, 0.0, 1.0);
}

CriticalLaw make_critical(double rho) { return {rho, critical_s_rho(rho), critical_mu(rho)}; }

double confined_scale(std::int64_t N, std::int64_t M) {
  if (N < 3 || M < 0) throw DomainError("confined_scale: need N >= 3, M >= 0");
  double Nd = static_cast<double>(N);
  return 4.0 / (Nd * Nd) * std::exp(static_cast<double>(M) * std::log(std::cos(kPi / Nd)));
}

double confined_scale_expform(std::int64_t N, std::int64_t M) {
  if (N < 3 || M < 0) throw DomainError("confined_scale_expform: need N >= 3, M >= 0");
  double Nd = static_cast<double>(N);
  return 4.0 / (Nd * Nd) * std::exp(-kPi * kPi * static_cast<double>(M) / (2.0 * Nd * Nd));
}

}  // namespace ewalk
