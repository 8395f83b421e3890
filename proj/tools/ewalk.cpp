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

// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 configuration error, 3 work budget or step horizon exceeded.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ewalk/campaigns.hpp"
#include "ewalk/config.hpp"
#include "ewalk/excursion.hpp"
#include "ewalk/lifetime.hpp"
#include "ewalk/limit_laws.hpp"
#include "ewalk/report.hpp"
#include "ewalk/stats.hpp"
#include "ewalk/walk_model.hpp"

using namespace ewalk;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double budget = 0.0;
  std::string out;
  std::string format;
  std::string config;
  bool timing = false;
};

struct CellArgs {
  std::string N = "inf";
  std::int64_t M = 100;
  std::int64_t x0 = 1;
  std::int64_t y0 = -1;
};

void add_cell(CLI::App* sub, CellArgs& a) {
  sub->add_option("--N", a.N, "interval length, or inf")->capture_default_str();
  sub->add_option("--M", a.M, "energy capacity")->capture_default_str();
  sub->add_option("--x0", a.x0, "start site")->capture_default_str();
  sub->add_option("--y0", a.y0, "start energy (default M)");
}

ExperimentConfig base_config(const Globals& g, CLI::App& app, const std::string& regime) {
  ExperimentConfig c;
  if (!g.config.empty()) c = load_config(g.config);
  if (!regime.empty()) c.regime = regime;
  if (app.count("--seed")) c.seed_root = g.seed;
  if (app.count("--threads")) c.threads = g.threads;
  if (app.count("--budget")) c.budget.max_work = static_cast<std::uint64_t>(g.budget);
  if (app.count("--out")) c.out = g.out;
  if (app.count("--format")) c.format = g.format;
  if (g.timing) c.timing = true;
  return c;
}

int finish(const RegimeReport& r, const ExperimentConfig& c) {
  emit_report(r, c.format, c.out, std::cout);
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ewalk: energy-constrained random walk workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed root");
  app.add_option("--threads", g.threads, "worker threads");
  app.add_option("--budget", g.budget, "work budget (abstract units)");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--config", g.config, "flat JSON config file");
  app.add_flag("--timing", g.timing, "record wall-clock runtimes (breaks byte-identical output)");

  CellArgs cell;
  std::uint64_t runs = 10000;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo lifetimes for one cell");
  add_cell(sim, cell);
  sim->add_option("--runs", runs, "number of runs")->capture_default_str();

  std::int64_t ex_N = 20, ex_x = 1, ex_n = 100;
  auto* exc = app.add_subcommand("excursion", "exit-time law of simple random walk");
  exc->add_option("--N", ex_N, "interval length")->capture_default_str();
  exc->add_option("--x", ex_x, "start site")->capture_default_str();
  exc->add_option("--n-max", ex_n, "last time step")->capture_default_str();

  CellArgs lcell;
  std::int64_t pmf_horizon = 0;
  auto* exact = app.add_subcommand("exact-lifetime", "exact mean and law of the lifetime");
  add_cell(exact, lcell);
  exact->add_option("--pmf-horizon", pmf_horizon, "also cross-check the DP law up to this time");

  double rho = 1.0;
  auto* lim = app.add_subcommand("limits", "evaluate limit laws and special functions");
  lim->add_option("--rho", rho, "critical ratio")->capture_default_str();

  std::string regime;
  auto* val = app.add_subcommand("validate", "run a campaign (meagre, confined, critical, validate)");
  val->add_option("--regime", regime, "campaign; overrides the config file's regime")
      ->check(CLI::IsMember({"meagre", "confined", "critical", "validate", "sweep"}));

  auto* swp = app.add_subcommand("sweep", "phase-diagram sweep of exact E lambda / M");

  std::string in_path;
  auto* rep = app.add_subcommand("report", "re-emit a saved JSON report");
  rep->add_option("--in", in_path, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*sim) {
      ExperimentConfig c = base_config(g, app, "");
      apply_defaults(c);
      ModelParams p(Length::parse(cell.N), cell.M);
      WalkerState z{cell.x0, cell.y0 >= 0 ? cell.y0 : cell.M, false};
      z.absorbed = z.e == 0 && z.x != 0 && z.x != p.effective_N(z.x);
      SimulationOptions opt;
      opt.keep_excursions = false;
      auto s = simulate_batch(p, z, runs, c.seed_root, opt, c.threads);
      std::vector<double> lam(s.size()), kap(s.size());
      double dead0 = 0.0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        lam[i] = static_cast<double>(s[i].lambda);
        kap[i] = static_cast<double>(s[i].kappa);
        dead0 += s[i].kappa == 0;
      }
      dead0 /= static_cast<double>(s.size());
      CellInfo ci{"simulate", p.N.to_string(), p.M, z.x, z.e, runs, c.seed_root};
      RegimeReport r{"simulate", c.seed_root, {}};
      r.rows.push_back(check_absolute(ci, "mean_lambda", "expected_lifetime_exact", mean(lam),
                                      expected_lifetime_exact(p, z, c.budget), 4.0 * standard_error(lam)));
      if (s.size() > 1) r.rows.push_back(info_row(ci, "var_lambda", "sample", variance(lam), NAN));
      const bool boundary = z.x == 0 || z.x == p.effective_N(z.x);
      double theta = excursion_law(p.N, p.M, c.budget).theta;
      double tz = boundary ? theta : extinction_prob(p.N, p.M, z.x, z.e, c.budget);
      r.rows.push_back(check_absolute(ci, "mean_kappa", "extinction_prob", mean(kap), (1.0 - tz) / theta,
                                      4.0 * standard_error(kap)));
      r.rows.push_back(check_absolute(ci, "fraction_kappa_0", "extinction_prob", dead0, tz,
                                      4.0 * std::sqrt(tz * (1.0 - tz) / static_cast<double>(runs))));
      return finish(r, c);
    }
    if (*exc) {
      ExperimentConfig c = base_config(g, app, "");
      apply_defaults(c);
      auto t = exit_pmf_dp(Length(ex_N), ex_x, ex_n, c.budget);
      CellInfo ci{"excursion", std::to_string(ex_N), 0, ex_x, 0, 0, c.seed_root};
      RegimeReport r{"excursion", c.seed_root, {}};
      for (std::int64_t n = 1; n <= ex_n; ++n) {
        if (ex_x == 1) r.rows.push_back(check_absolute(ci, "pmf(" + std::to_string(n) + ")",
                                                       "exit_pmf_cosine", t.pmf[n],
                                                       exit_pmf_cosine(ex_N, n), 1e-12));
        else r.rows.push_back(info_row(ci, "pmf(" + std::to_string(n) + ")", "exit_pmf_dp", t.pmf[n], NAN));
      }
      r.rows.push_back(check_absolute(ci, "tail_remainder", "exit_tail", t.tail_remainder,
                                      exit_tail(Length(ex_N), ex_x, ex_n, c.budget), 1e-12));
      auto [m, v] = exit_moments(ex_N, ex_x);
      r.rows.push_back(info_row(ci, "mean_truncated", "exit_moments", table_moments(t).first, m));
      r.rows.push_back(info_row(ci, "variance_truncated", "exit_moments", table_moments(t).second, v));
      return finish(r, c);
    }
    if (*exact) {
      ExperimentConfig c = base_config(g, app, "");
      apply_defaults(c);
      ModelParams p(Length::parse(lcell.N), lcell.M);
      WalkerState z{lcell.x0, lcell.y0 >= 0 ? lcell.y0 : lcell.M, false};
      CellInfo ci{"exact-lifetime", p.N.to_string(), p.M, z.x, z.e, 0, c.seed_root};
      RegimeReport r{"exact-lifetime", c.seed_root, {}};
      double el = expected_lifetime_exact(p, z, c.budget);
      ExcursionLaw law = excursion_law(p.N, p.M, c.budget);
      r.rows.push_back(info_row(ci, "mean_lambda", "expected_lifetime_exact", el, NAN));
      r.rows.push_back(info_row(ci, "mean_lambda_over_M", "expected_lifetime_exact",
                                el / static_cast<double>(p.M), NAN));
      r.rows.push_back(info_row(ci, "theta", "excursion_law", law.theta, NAN));
      r.rows.push_back(info_row(ci, "conditional_mean_nu", "excursion_law", law.conditional_mean(), NAN));
      if (pmf_horizon > 0) {
        auto dp = lifetime_pmf_dp(p, z, pmf_horizon, c.budget);
        auto rn = lifetime_pmf_renewal(p, z, pmf_horizon, c.budget);
        double tv = std::abs(dp.residual - rn.residual);
        for (std::size_t i = 0; i < dp.pmf.size(); ++i) tv += std::abs(dp.pmf[i] - rn.pmf[i]);
        r.rows.push_back(check_upper(ci, "tv_dp_vs_renewal", "lifetime_pmf_renewal", 0.5 * tv, 0.0, 1e-10));
        r.rows.push_back(info_row(ci, "dp_residual", "lifetime_pmf_dp", dp.residual,
                                  block_survival_bound(p.M, pmf_horizon)));
      }
      return finish(r, c);
    }
    if (*lim) {
      ExperimentConfig c = base_config(g, app, "");
      apply_defaults(c);
      CellInfo ci{"limits", "limit", 0, 0, 0, 0, c.seed_root};
      RegimeReport r{"limits", c.seed_root, {}};
      r.rows.push_back(check_absolute(ci, "t0", "find_t0", find_t0(), 0.8540326566, 1e-8));
      auto ups = dm_moments(6);
      for (int k = 1; k <= 6; ++k)
        r.rows.push_back(info_row(ci, "upsilon_" + std::to_string(k), "dm_moments",
                                  static_cast<double>(ups[k]), static_cast<double>(ups[k])));
      for (double y : {0.01, 0.1, 0.25, 1.0, 3.0})
        r.rows.push_back(check_absolute(ci, "H(" + std::to_string(y) + ")", "theta_H_direct",
                                        theta_H_dual(y), theta_H_direct(y), 1e-12));
      r.rows.push_back(check_absolute(ci, "integral_H", "1/4", theta_H_integral_inf(), 0.25, 1e-6));
      double mu = critical_mu(rho);
      r.rows.push_back(info_row(ci, "mu(rho)", "critical_mu", mu, mu));
      r.rows.push_back(info_row(ci, "s_rho", "critical_s_rho", critical_s_rho(rho), NAN));
      r.rows.push_back(check_absolute(ci, "dG_ds_at_0", "critical_mu", critical_dG_at_zero(rho), mu, 1e-6));
      return finish(r, c);
    }
    if (*val) {
      ExperimentConfig c = base_config(g, app, regime);
      apply_defaults(c);
      return finish(run_campaign(c), c);
    }
    if (*swp) {
      ExperimentConfig c = base_config(g, app, "sweep");
      apply_defaults(c);
      return finish(sweep_phase_diagram(c), c);
    }
    if (*rep) {
      std::ifstream f(in_path);
      if (!f) throw ConfigError("cannot read '" + in_path + "'");
      std::stringstream ss;
      ss << f.rdbuf();
      RegimeReport r = report_from_json(ss.str());
      ExperimentConfig c = base_config(g, app, "");
      return finish(r, c);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const HorizonExceeded& e) {
    std::cerr << "horizon exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
