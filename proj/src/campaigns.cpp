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

#include "ewalk/campaigns.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ewalk/excursion.hpp"
#include "ewalk/lifetime.hpp"
#include "ewalk/limit_laws.hpp"
#include "ewalk/parallel.hpp"
#include "ewalk/rng.hpp"
#include "ewalk/sampler.hpp"
#include "ewalk/stats.hpp"
#include "ewalk/walk_model.hpp"

namespace ewalk {

namespace {

class Timer {
 public:
  explicit Timer(bool on) : on_(on), t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!on_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point t0_;
};

std::uint64_t cell_seed(std::uint64_t root, std::uint64_t k) {
  return derive_seed(root, (std::uint64_t{1} << 40) + k);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void stamp(RegimeReport& r, std::size_t from, const Timer& t) {
  double ms = t.ms();
  for (std::size_t i = from; i < r.rows.size(); ++i) r.rows[i].runtime_ms = ms;
}

std::vector<double> scaled_lifetimes(const std::vector<LifetimeSample>& s, double scale) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = static_cast<double>(s[i].lambda) * scale;
  return v;
}

double exp_cdf(double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); }

}  // namespace

// ---------------------------------------------------------------------------
// Meagre capacity: M << N^2.

RegimeReport run_meagre(const ExperimentConfig& c) {
  RegimeReport rep;
  rep.regime = "meagre";
  rep.seed_root = c.seed_root;
  SimulationOptions opt;
  opt.keep_excursions = false;
  const double ksig = tolerance(c, "meagre.sigma");
  std::uint64_t k = 0;

  for (Length N : c.N) {
    for (std::int64_t M : c.M) {
      const double Md = static_cast<double>(M);
      ModelParams p(N, M);

      // Standard start, or the configured one.
      {
        Timer t(c.timing);
        std::size_t first = rep.rows.size();
        WalkerState z{c.x0 > 0 ? c.x0 : 1, c.y0 > 0 ? c.y0 : M, false};
        std::uint64_t seed = cell_seed(c.seed_root, k++);
        CellInfo cell{"meagre", N.to_string(), M, z.x, z.e, c.runs, c.seed_root};
        auto s = simulate_batch(p, z, c.runs, seed, opt, c.threads);
        auto r = scaled_lifetimes(s, 1.0 / Md);
        // A start at site 1 is the a = 0 case (x0^2 / M -> 0).
        const double a = z.x == 1 ? 0.0 : static_cast<double>(z.x * z.x) / Md;
        const double u = static_cast<double>(z.e) / Md;
        const double m = mean(r);
        rep.rows.push_back(check_relative(cell, "mean_lambda_over_M",
                                          "g_mean(a=" + fmt(a) + ",u=" + fmt(u) + ")", m,
                                          g_mean(a, u), tolerance(c, "meagre.mean")));
        double exact = expected_lifetime_exact(p, z, c.budget) / Md;
        rep.rows.push_back(check_absolute(cell, "mean_lambda_over_M_vs_exact",
                                          "expected_lifetime_exact", m, exact,
                                          ksig * standard_error(r)));
        if (z.x == 1 && z.e == M) {
          auto ups = dm_moments(2);
          double theo_var = static_cast<double>(ups[2] - ups[1] * ups[1]);
          std::vector<double> xi(r.size());
          for (std::size_t i = 0; i < r.size(); ++i) xi[i] = r[i] - 1.0;
          rep.rows.push_back(check_interval(cell, "var_lambda_over_M_minus_1", "dm_moments(2)",
                                            variance(xi), theo_var, tolerance(c, "meagre.var_lo"),
                                            tolerance(c, "meagre.var_hi")));
          rep.rows.push_back(info_row(cell, "mean_lambda_over_M_minus_1", "dm_moments(1)",
                                      mean(xi), static_cast<double>(ups[1])));
        }
        std::uint64_t died_first = 0;
        for (const auto& x : s) died_first += (x.kappa == 0);
        double f = static_cast<double>(died_first) / static_cast<double>(s.size());
        double tz = extinction_prob(N, M, z.x, z.e, c.budget);
        rep.rows.push_back(check_absolute(cell, "fraction_kappa_0", "extinction_prob", f, tz,
                                          ksig * std::sqrt(tz * (1 - tz) / static_cast<double>(s.size()))));
        stamp(rep, first, t);
      }

      // a = infinity proxy: start in the middle of a long interval.
      if (c.a_inf_N > 0) {
        Timer t(c.timing);
        std::size_t first = rep.rows.size();
        ModelParams q(Length(c.a_inf_N), M);
        WalkerState z{c.a_inf_N / 2, M, false};
        CellInfo cell{"meagre", std::to_string(c.a_inf_N), M, z.x, z.e, c.a_inf_runs, c.seed_root};
        auto s = simulate_batch(q, z, c.a_inf_runs, cell_seed(c.seed_root, k++), opt, c.threads);
        std::uint64_t in = 0;
        for (const auto& x : s) {
          double v = static_cast<double>(x.lambda) / Md;
          in += (v >= 0.99 && v <= 1.0);
        }
        double frac = static_cast<double>(in) / static_cast<double>(s.size());
        rep.rows.push_back(check_interval(cell, "fraction_lambda_over_M_in_[0.99,1]",
                                          "g_mean(a=inf,u=1)", frac, 1.0,
                                          tolerance(c, "meagre.concentration"), 1.0));
        stamp(rep, first, t);
      }

      // a > 0: start at distance ~ sqrt(a M) from the boundary.
      for (double a_req : c.a) {
        Timer t(c.timing);
        std::size_t first = rep.rows.size();
        std::int64_t x0 = std::max<std::int64_t>(1, std::llround(std::sqrt(a_req * Md)));
        std::int64_t y0 = std::max<std::int64_t>(1, std::llround(c.u * Md));
        WalkerState z{x0, y0, false};
        CellInfo cell{"meagre", N.to_string(), M, x0, y0, c.runs, c.seed_root};
        auto s = simulate_batch(p, z, c.runs, cell_seed(c.seed_root, k++), opt, c.threads);
        auto r = scaled_lifetimes(s, 1.0 / Md);
        const double a = static_cast<double>(x0 * x0) / Md;
        const double u = static_cast<double>(y0) / Md;
        std::uint64_t atom = 0;
        for (const auto& x : s) atom += (x.kappa == 0);
        double f = static_cast<double>(atom) / static_cast<double>(s.size());
        rep.rows.push_back(check_absolute(cell, "atom_mass_at_u",
                                          "2*normal_cdf(sqrt(a/u))-1, a=" + fmt(a), f,
                                          2.0 * normal_cdf(std::sqrt(a / u)) - 1.0,
                                          tolerance(c, "meagre.atom")));
        double m = mean(r);
        rep.rows.push_back(check_relative(cell, "mean_lambda_over_M",
                                          "g_mean(a=" + fmt(a) + ",u=" + fmt(u) + ")", m,
                                          g_mean(a, u), tolerance(c, "meagre.mean_a")));
        double exact = expected_lifetime_exact(p, z, c.budget) / Md;
        rep.rows.push_back(check_absolute(cell, "mean_lambda_over_M_vs_exact",
                                          "expected_lifetime_exact", m, exact,
                                          ksig * standard_error(r)));
        stamp(rep, first, t);
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Confined space: M >> N^2.

RegimeReport run_confined(const ExperimentConfig& c) {
  RegimeReport rep;
  rep.regime = "confined";
  rep.seed_root = c.seed_root;
  std::uint64_t k = 0;

  for (Length N : c.N) {
    for (std::int64_t M : c.M) {
      Timer t(c.timing);
      std::size_t first = rep.rows.size();
      const std::int64_t n = N.value();
      const double Nd = static_cast<double>(n);
      ModelParams p(N, M);
      WalkerState z{c.x0 > 0 ? c.x0 : 1, c.y0 > 0 ? c.y0 : M, false};
      CellInfo cell{"confined", N.to_string(), M, z.x, z.e, c.replicates, c.seed_root};
      std::uint64_t seed = cell_seed(c.seed_root, k++);

      ExcursionLaw law = excursion_law(N, M, c.budget);
      const double scale = confined_scale(n, M);
      const double mean_lambda = expected_lifetime_exact(p, z, c.budget);

      std::string how = c.sampler;
      double direct_work = mean_lambda * static_cast<double>(c.replicates);
      if (how == "auto") {
        how = (law.theta >= 1e-6 && direct_work <= static_cast<double>(c.budget.max_work)) ? "direct"
                                                                                           : "renewal";
      }
      std::vector<double> lam;
      if (how == "direct") {
        c.budget.require(static_cast<std::uint64_t>(direct_work), "run_confined direct sampling");
        SimulationOptions opt;
        opt.keep_excursions = false;
        auto s = simulate_batch(p, z, c.replicates, seed, opt, c.threads);
        lam = scaled_lifetimes(s, scale);
      } else {
        RenewalSampler rs(p, z, c.budget);
        c.budget.require(static_cast<std::uint64_t>(rs.expected_draws() * c.replicates),
                         "run_confined renewal sampling");
        lam = rs.batch(c.replicates, seed, c.threads);
        for (double& v : lam) v *= scale;
      }
      cell.runs = c.replicates;

      double ks = ks_statistic(lam, exp_cdf);
      rep.rows.push_back(check_upper(cell, "ks_scaled_lambda_vs_exp1[" + how + "]",
                                     "ks_statistic(exp_cdf)+lattice", ks, 0.0,
                                     tolerance(c, "confined.ks") + scale));
      const double mu = law.conditional_mean(), var = law.conditional_variance();
      rep.rows.push_back(check_upper(cell, "condition_sigma2_p_over_mu2", "excursion_law",
                                     var * law.theta / (mu * mu), 0.0,
                                     tolerance(c, "confined.condition")));
      rep.rows.push_back(check_relative(cell, "conditional_mean_nu", "N", mu, Nd,
                                        tolerance(c, "confined.cond_mean")));
      rep.rows.push_back(info_row(cell, "conditional_variance_nu", "N^3/3", var, Nd * Nd * Nd / 3.0));
      double cosM = std::exp(static_cast<double>(M) * std::log(std::cos(std::numbers::pi / Nd)));
      rep.rows.push_back(info_row(cell, "theta_over_4cosM_over_N", "extinction_prob",
                                  extinction_prob(N, M, 1, M, c.budget) * Nd / (4.0 * cosM), 1.0));
      rep.rows.push_back(info_row(cell, "exact_mean_scaled_lambda", "expected_lifetime_exact",
                                  mean_lambda * scale, 1.0));
      rep.rows.push_back(info_row(cell, "sample_mean_scaled_lambda", "exp_mean", mean(lam), 1.0));
      stamp(rep, first, t);
    }
  }

  // Triangular-array exponential limit with exact ingredients.
  {
    Timer t(c.timing);
    std::size_t first = rep.rows.size();
    ExcursionLaw law = excursion_law(Length(c.synthetic_N), c.synthetic_M, c.budget);
    TableSampler y(law.conditional_pmf());
    const double mu = law.conditional_mean(), var = law.conditional_variance();
    const double p = c.synthetic_p;
    c.budget.require(static_cast<std::uint64_t>(c.synthetic_replicates / p), "synthetic check");
    std::uint64_t seed = cell_seed(c.seed_root, k++);
    std::vector<double> v(c.synthetic_replicates);
    parallel_for(v.size(), c.threads, [&](std::size_t i) {
      CounterRng rng(derive_seed(seed, i));
      v[i] = p * sample_geometric_sum(p, y, rng) / mu;
    });
    CellInfo cell{"confined-synthetic", std::to_string(c.synthetic_N), c.synthetic_M, 1,
                  c.synthetic_M, c.synthetic_replicates, c.seed_root};
    rep.rows.push_back(check_upper(cell, "ks_geometric_sum_vs_exp1", "ks_statistic(exp_cdf)+lattice",
                                   ks_statistic(v, exp_cdf), 0.0,
                                   tolerance(c, "confined.synthetic_ks") + p / mu));
    rep.rows.push_back(check_upper(cell, "condition_sigma2_p_over_mu2", "excursion_law",
                                   var * p / (mu * mu), 0.0, tolerance(c, "confined.condition")));
    stamp(rep, first, t);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Critical: M ~ rho N^2.

double critical_dG_at_zero(double rho) {
  auto D = [rho](double h) { return (critical_G(rho, h) - critical_G(rho, -h)) / (2.0 * h); };
  const double h = 1e-3;
  return (4.0 * D(h / 2.0) - D(h)) / 3.0;
}

RegimeReport run_critical(const ExperimentConfig& c) {
  RegimeReport rep;
  rep.regime = "critical";
  rep.seed_root = c.seed_root;
  std::uint64_t k = 0;
  const double ksig = tolerance(c, "critical.sigma");

  for (double rho : c.rho) {
    const double mu = critical_mu(rho);
    const double s_rho = critical_s_rho(rho);
    for (Length N : c.N) {
      Timer t(c.timing);
      std::size_t first = rep.rows.size();
      const std::int64_t n = N.value();
      const std::int64_t M = std::llround(rho * static_cast<double>(n) * static_cast<double>(n));
      const double Md = static_cast<double>(M);
      ModelParams p(N, M);
      WalkerState z{1, M, false};
      CellInfo cell{"critical", N.to_string(), M, 1, M, 0, c.seed_root};

      const double exact = expected_lifetime_exact(p, z, c.budget) / Md;
      rep.rows.push_back(check_relative(cell, "exact_mean_lambda_over_M",
                                        "1+critical_mu(" + fmt(rho) + ")", exact, 1.0 + mu,
                                        tolerance(c, "critical.mean")));

      ExcursionLaw law = excursion_law(N, M, c.budget);
      for (double s : {-1.0, 0.5 * s_rho}) {
        double lhs = compound_mgf(law, s / Md) * std::exp(s * (Md + 1.0) / Md);
        double rhs = std::exp(s) * critical_mgf(rho, s);
        rep.rows.push_back(check_relative(cell, "mgf_ratio_s=" + fmt(s),
                                          "exp(s)*critical_mgf(rho,s)", lhs / rhs, 1.0,
                                          tolerance(c, "critical.mgf")));
      }

      if (c.runs > 0) {
        SimulationOptions opt;
        opt.keep_excursions = false;
        auto s = simulate_batch(p, z, c.runs, cell_seed(c.seed_root, k++), opt, c.threads);
        auto r = scaled_lifetimes(s, 1.0 / Md);
        CellInfo mc = cell;
        mc.runs = c.runs;
        rep.rows.push_back(check_absolute(mc, "mc_mean_lambda_over_M", "expected_lifetime_exact",
                                          mean(r), exact, ksig * standard_error(r)));
        // E exp(s lambda / M) from (1, M) is e^s times the compound MGF at s / M.
        const double sm = -1.0;
        std::vector<double> e(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) e[i] = std::exp(sm * r[i]);
        rep.rows.push_back(check_absolute(mc, "mc_mgf_s=-1", "compound_mgf", mean(e),
                                          std::exp(sm) * compound_mgf(law, sm / Md),
                                          ksig * standard_error(e)));
      }
      stamp(rep, first, t);
    }

    Timer t(c.timing);
    std::size_t first = rep.rows.size();
    CellInfo cell{"critical", "limit", 0, 0, 0, 0, c.seed_root};
    rep.rows.push_back(check_absolute(cell, "dG_ds_at_0(rho=" + fmt(rho) + ")", "critical_mu",
                                      critical_dG_at_zero(rho), mu, tolerance(c, "critical.dG")));
    rep.rows.push_back(check_absolute(cell, "levy_G(rho=" + fmt(rho) + ",s=0.5)",
                                      "critical_G", levy_G(rho, 0.5), critical_G(rho, 0.5),
                                      tolerance(c, "critical.levy")));
    rep.rows.push_back(info_row(cell, "s_rho(rho=" + fmt(rho) + ")", "critical_s_rho", s_rho,
                                s_rho));
    stamp(rep, first, t);
  }

  {
    CellInfo cell{"critical", "limit", 0, 0, 0, 0, c.seed_root};
    std::vector<double> g = c.rho_grid;
    std::sort(g.begin(), g.end());
    bool mono = true;
    double prev = -1.0;
    for (double r : g) {
      double m = critical_mu(r);
      rep.rows.push_back(info_row(cell, "mu(rho=" + fmt(r) + ")", "critical_mu", m, m));
      mono = mono && m > prev;
      prev = m;
    }
    rep.rows.push_back(check_interval(cell, "mu_monotone_on_rho_grid", "critical_mu",
                                      mono ? 1.0 : 0.0, 1.0, 1.0, 1.0));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Phase diagram.

RegimeReport sweep_phase_diagram(const ExperimentConfig& c) {
  RegimeReport rep;
  rep.regime = "sweep";
  rep.seed_root = c.seed_root;
  const double mu1 = critical_mu(1.0);
  for (Length N : c.N) {
    for (std::int64_t M : c.M) {
      Timer t(c.timing);
      std::size_t first = rep.rows.size();
      const double Nd = static_cast<double>(N.value()), Md = static_cast<double>(M);
      const double ratio = Md / (Nd * Nd);
      CellInfo cell{"sweep", N.to_string(), M, 1, M, 0, c.seed_root};
      try {
        ModelParams p(N, M);
        double el = expected_lifetime_exact(p, WalkerState{1, M, false}, c.budget) / Md;
        double th = extinction_prob(N, M, 1, M, c.budget);
        rep.rows.push_back(info_row(cell, "M_over_N2", "ratio", ratio, ratio));
        if (ratio <= c.meagre_threshold) {
          rep.rows.push_back(check_interval(cell, "exact_mean_lambda_over_M", "g_mean(0,1)", el, 2.0,
                                            tolerance(c, "sweep.meagre_lo"),
                                            tolerance(c, "sweep.meagre_hi")));
        } else if (std::abs(ratio - 1.0) < 1e-12) {
          rep.rows.push_back(check_relative(cell, "exact_mean_lambda_over_M", "1+critical_mu(1)", el,
                                            1.0 + mu1, tolerance(c, "sweep.critical")));
        } else {
          rep.rows.push_back(info_row(cell, "exact_mean_lambda_over_M",
                                      "1+critical_mu(" + fmt(ratio) + ")", el,
                                      1.0 + critical_mu(ratio)));
        }
        rep.rows.push_back(info_row(cell, "theta_sqrtM_sqrt_pi_over_2", "extinction_prob",
                                    th * std::sqrt(Md * std::numbers::pi / 2.0), 1.0));
        rep.rows.push_back(info_row(cell, "theta", "extinction_prob", th, th));
      } catch (const BudgetExceeded& e) {
        rep.rows.push_back(info_row(cell, "skipped_budget", e.what(),
                                    std::numeric_limits<double>::quiet_NaN(), ratio));
      }
      stamp(rep, first, t);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact cross-checks on small instances.

double max_tv_brute_vs_dp(std::int64_t n_max, std::int64_t m_max, std::int64_t horizon) {
  double worst = 0.0;
  for (std::int64_t N = 3; N <= n_max; ++N) {
    for (std::int64_t M = 1; M <= m_max; ++M) {
      ModelParams p(Length(N), M);
      for (std::int64_t x = 0; x <= N; ++x) {
        for (std::int64_t e = 0; e <= M; ++e) {
          bool interior = x != 0 && x != N;
          if (interior && e == 0) continue;
          WalkerState z{x, e, false};
          auto bf = brute_force_pmf(p, z, horizon);
          auto dp = lifetime_pmf_dp(p, z, horizon);
          double tv = std::abs(bf.law.residual - dp.residual);
          for (std::size_t i = 0; i < bf.law.pmf.size(); ++i) tv += std::abs(bf.law.pmf[i] - dp.pmf[i]);
          worst = std::max(worst, 0.5 * tv);
        }
      }
    }
  }
  return worst;
}

double max_cosine_vs_dp(std::int64_t n_lo, std::int64_t n_hi, std::int64_t t_max) {
  double worst = 0.0;
  for (std::int64_t N = n_lo; N <= n_hi; ++N) {
    auto t = exit_pmf_dp(Length(N), 1, t_max);
    for (std::int64_t n = 1; n <= t_max; ++n)
      worst = std::max(worst, std::abs(exit_pmf_cosine(N, n) - t.pmf[n]));
  }
  return worst;
}

double max_moment_rel_error(std::int64_t n_max) {
  double worst = 0.0;
  for (std::int64_t N = 2; N <= n_max; ++N) {
    // Tail decays like cos^n(pi/N); run until it is far below 1e-14.
    double rate = -std::log(std::cos(std::numbers::pi / static_cast<double>(N)));
    auto horizon = static_cast<std::int64_t>(std::ceil(45.0 / rate)) + 10;
    for (std::int64_t x = 1; x < N; ++x) {
      auto t = exit_pmf_dp(Length(N), x, horizon);
      auto [m, v] = table_moments(t);
      auto [m0, v0] = exit_moments(N, x);
      worst = std::max(worst, std::abs(m / m0 - 1.0));
      if (v0 > 0.0) worst = std::max(worst, std::abs(v / v0 - 1.0));
      else worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

double max_tv_renewal_vs_dp(std::int64_t n_max, std::int64_t m_max, std::int64_t horizon) {
  double worst = 0.0;
  for (std::int64_t N = 3; N <= n_max; ++N) {
    for (std::int64_t M = 1; M <= m_max; ++M) {
      ModelParams p(Length(N), M);
      WalkerState z{1, M, false};
      auto dp = lifetime_pmf_dp(p, z, horizon);
      const std::int64_t h = horizon;
      auto rn = lifetime_pmf_renewal(p, z, h);
      double tv = std::abs(dp.residual - rn.residual);
      for (std::int64_t i = 0; i <= h; ++i) tv += std::abs(dp.pmf[i] - rn.pmf[i]);
      worst = std::max(worst, 0.5 * tv);
    }
  }
  return worst;
}

double kappa_geometric_max_z(std::int64_t N, std::int64_t M, std::uint64_t runs,
                             std::uint64_t seed_root, int k_max, unsigned threads) {
  ModelParams p(Length(N), M);
  WalkerState z{1, M, false};
  SimulationOptions opt;
  opt.keep_excursions = false;
  auto s = simulate_batch(p, z, runs, seed_root, opt, threads);
  const double tz = extinction_prob(Length(N), M, 1, M);
  const double th = excursion_law(Length(N), M).theta;
  double worst = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    std::uint64_t cnt = 0;
    for (const auto& x : s) cnt += (x.kappa >= static_cast<std::uint64_t>(k));
    double phat = static_cast<double>(cnt) / static_cast<double>(runs);
    double q = (1.0 - tz) * std::pow(1.0 - th, k - 1);
    double sd = std::sqrt(q * (1.0 - q) / static_cast<double>(runs));
    worst = std::max(worst, std::abs(phat - q) / sd);
  }
  return worst;
}

RegimeReport run_validate(const ExperimentConfig& c) {
  RegimeReport rep;
  rep.regime = "validate";
  rep.seed_root = c.seed_root;
  const double exact_tol = tolerance(c, "validate.exact");
  const double ksig = tolerance(c, "validate.sigma");
  CellInfo none{"validate", "grid", 0, 0, 0, 0, c.seed_root};

  rep.rows.push_back(check_upper(none, "tv_brute_force_vs_dp_N<=5_M<=4", "brute_force_pmf",
                                 max_tv_brute_vs_dp(5, 4, 40), 0.0, exact_tol));
  rep.rows.push_back(check_upper(none, "max_abs_cosine_vs_dp_N<=50_n<=500", "exit_pmf_dp",
                                 max_cosine_vs_dp(3, 50, 500), 0.0, exact_tol));
  rep.rows.push_back(check_upper(none, "max_rel_moment_error_N<=30", "exit_moments",
                                 max_moment_rel_error(30), 0.0, 1e-8));
  rep.rows.push_back(check_upper(none, "tv_renewal_vs_dp_N<=10_M<=50", "lifetime_pmf_dp",
                                 max_tv_renewal_vs_dp(10, 50, 3000), 0.0, 1e-10));

  {
    ModelParams p(Length(3), 1);
    WalkerState z{1, 1, false};
    CellInfo cell{"validate", "3", 1, 1, 1, c.runs, c.seed_root};
    SimulationOptions opt;
    opt.keep_excursions = false;
    auto s = simulate_batch(p, z, c.runs, cell_seed(c.seed_root, 0), opt, c.threads);
    auto r = scaled_lifetimes(s, 1.0);
    rep.rows.push_back(check_absolute(cell, "mc_mean_lambda", "expected_lifetime_exact", mean(r),
                                      expected_lifetime_exact(p, z), ksig * standard_error(r)));
  }
  {
    CellInfo cell{"validate", "4", 3, 1, 3, c.runs, c.seed_root};
    rep.rows.push_back(check_upper(cell, "kappa_geometric_max_z_k<=10", "extinction_prob",
                                   kappa_geometric_max_z(4, 3, c.runs, cell_seed(c.seed_root, 1), 10,
                                                         c.threads),
                                   0.0, ksig));
  }
  return rep;
}

RegimeReport run_campaign(const ExperimentConfig& c) {
  if (c.regime == "meagre") return run_meagre(c);
  if (c.regime == "confined") return run_confined(c);
  if (c.regime == "critical") return run_critical(c);
  if (c.regime == "sweep") return sweep_phase_diagram(c);
  if (c.regime == "validate") return run_validate(c);
  throw ConfigError("unknown regime '" + c.regime + "'");
}

}  // namespace ewalk
