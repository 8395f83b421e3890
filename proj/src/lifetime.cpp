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

#include "ewalk/lifetime.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ewalk/excursion.hpp"

namespace ewalk {

double DefectivePmf::total() const {
  double s = 0.0;
  for (double m : mass) s += m;
  return s;
}

double DefectivePmf::mean_restricted() const {
  double s = 0.0;
  for (std::size_t n = 0; n < mass.size(); ++n) s += static_cast<double>(n) * mass[n];
  return s;
}

double ExcursionLaw::conditional_mean() const {
  return durations.mean_restricted() / durations.total();
}

double ExcursionLaw::conditional_variance() const {
  double z = durations.total(), m1 = 0.0, m2 = 0.0;
  for (std::size_t n = 0; n < durations.mass.size(); ++n) {
    double v = static_cast<double>(n), w = durations.mass[n] / z;
    m1 += v * w;
    m2 += v * v * w;
  }
  return m2 - m1 * m1;
}

std::vector<double> ExcursionLaw::conditional_pmf() const {
  std::vector<double> out = durations.mass;
  double z = durations.total();
  for (double& v : out) v /= z;
  return out;
}

double extinction_prob(Length N, std::int64_t M, std::int64_t x, std::int64_t y,
                       const WorkBudget& budget) {
  if (N.is_finite() && N.value() < 3) throw DomainError("extinction_prob: need N >= 3");
  if (y < 1 || y > M) throw DomainError("extinction_prob: need 1 <= y <= M");
  if (x <= 0 || (N.is_finite() && x >= N.value())) throw DomainError("extinction_prob: x not interior");
  return exit_tail(N, x, y, budget);
}

ExcursionLaw excursion_law(Length N, std::int64_t M, const WorkBudget& budget) {
  ModelParams p(N, M);
  ExitLawTable t = exit_pmf_dp(Length(p.effective_N(1)), 1, M, budget);
  ExcursionLaw law;
  law.durations.mass.assign(static_cast<std::size_t>(M) + 2, 0.0);
  for (std::int64_t n = 1; n <= M; ++n) law.durations.mass[n + 1] = t.pmf[n];
  law.theta = t.tail_remainder;
  law.durations.defect = law.theta;
  return law;
}

DefectivePmf first_excursion_law(const ModelParams& p, const WalkerState& start,
                                 const WorkBudget& budget) {
  const std::int64_t n = p.effective_N(start.x);
  validate_state(n, p.M, start);
  if (start.absorbed) throw DomainError("first_excursion_law: start is absorbed");
  if (start.x == 0 || start.x == n) return excursion_law(p.N, p.M, budget).durations;
  ExitLawTable t = exit_pmf_dp(Length(n), start.x, start.e, budget);
  DefectivePmf d;
  d.mass = t.pmf;
  d.mass[0] = 0.0;
  d.defect = t.tail_remainder;
  return d;
}

double block_survival_bound(std::int64_t M, std::int64_t t) {
  double blocks = std::floor(static_cast<double>(t) / static_cast<double>(M + 1));
  return std::exp(blocks * std::log1p(-std::ldexp(1.0, static_cast<int>(-std::min<std::int64_t>(M, 1000)))));
}

namespace {

// Distribution over the rectangle, stored as energy layers over interior sites
// plus the two boundary masses (energy is irrelevant on the boundary).
class RectangleDp {
 public:
  RectangleDp(std::int64_t n, std::int64_t M, const WalkerState& s)
      : n_(n), M_(M), layers_(static_cast<std::size_t>(M) + 1, std::vector<double>(n + 1, 0.0)) {
    if (s.x == 0) b0_ = 1.0;
    else if (s.x == n) bn_ = 1.0;
    else layers_[s.e][s.x] = 1.0;
  }

  // Removes and returns the mass sitting in the interior with no energy.
  double harvest() {
    double s = 0.0;
    auto& l = layers_[0];
    for (std::int64_t x = 1; x < n_; ++x) {
      s += l[x];
      l[x] = 0.0;
    }
    return s;
  }

  void step() {
    double nb0 = 0.0, nbn = 0.0;
    for (std::int64_t e = 1; e <= M_; ++e) {
      const auto& src = layers_[e];
      auto& dst = layers_[e - 1];
      for (std::int64_t x = 1; x < n_; ++x) dst[x] = 0.5 * (src[x - 1] + src[x + 1]);
      nb0 += 0.5 * src[1];
      nbn += 0.5 * src[n_ - 1];
    }
    auto& top = layers_[M_];
    std::fill(top.begin(), top.end(), 0.0);
    top[1] += b0_;
    top[n_ - 1] += bn_;
    b0_ = nb0;
    bn_ = nbn;
  }

  double live() const {
    double s = b0_ + bn_;
    for (const auto& l : layers_)
      for (double v : l) s += v;
    return s;
  }

  std::uint64_t work_per_step() const {
    return static_cast<std::uint64_t>(n_ - 1) * static_cast<std::uint64_t>(M_);
  }

 private:
  std::int64_t n_, M_;
  std::vector<std::vector<double>> layers_;
  double b0_ = 0.0, bn_ = 0.0;
};

RectangleDp make_dp(const ModelParams& p, const WalkerState& start) {
  const std::int64_t n = p.effective_N(start.x);
  validate_state(n, p.M, start);
  if (start.absorbed) throw DomainError("lifetime_pmf_dp: start is absorbed");
  return RectangleDp(n, p.M, start);
}

void check_block_bound(const LifetimeLaw& law, std::int64_t M) {
  std::int64_t t = static_cast<std::int64_t>(law.pmf.size()) - 1;
  if (law.residual > block_survival_bound(M, t) * (1.0 + 1e-9) + 1e-15) {
    throw Error("lifetime_pmf_dp: residual above the block survival bound");
  }
}

}  // namespace

LifetimeLaw lifetime_pmf_dp(const ModelParams& p, const WalkerState& start, std::int64_t horizon,
                            const WorkBudget& budget) {
  if (horizon < 0) throw DomainError("lifetime_pmf_dp: horizon < 0");
  RectangleDp dp = make_dp(p, start);
  budget.require(dp.work_per_step() * static_cast<std::uint64_t>(horizon), "lifetime_pmf_dp");
  budget.require_entries(static_cast<std::uint64_t>(horizon) + 1, "lifetime_pmf_dp");
  LifetimeLaw law;
  law.provenance = "dp";
  law.pmf.reserve(static_cast<std::size_t>(horizon) + 1);
  law.pmf.push_back(dp.harvest());
  for (std::int64_t t = 1; t <= horizon; ++t) {
    dp.step();
    law.pmf.push_back(dp.harvest());
  }
  law.residual = dp.live();
  check_block_bound(law, p.M);
  return law;
}

LifetimeLaw lifetime_pmf_dp_converged(const ModelParams& p, const WalkerState& start, double tol,
                                      const WorkBudget& budget) {
  RectangleDp dp = make_dp(p, start);
  LifetimeLaw law;
  law.provenance = "dp";
  law.pmf.push_back(dp.harvest());
  std::uint64_t work = 0;
  double live = dp.live();
  while (live >= tol) {
    work += dp.work_per_step();
    budget.require(work, "lifetime_pmf_dp_converged");
    budget.require_entries(law.pmf.size() + 1, "lifetime_pmf_dp_converged");
    dp.step();
    law.pmf.push_back(dp.harvest());
    live = dp.live();
  }
  law.residual = live;
  check_block_bound(law, p.M);
  double m = 0.0;
  for (std::size_t n = 0; n < law.pmf.size(); ++n) m += static_cast<double>(n) * law.pmf[n];
  law.mean = m;
  return law;
}

LifetimeLaw lifetime_pmf_renewal(const ModelParams& p, const WalkerState& start,
                                 std::int64_t horizon, const WorkBudget& budget) {
  if (horizon < 0) throw DomainError("lifetime_pmf_renewal: horizon < 0");
  budget.require_entries(static_cast<std::uint64_t>(horizon) + 1, "lifetime_pmf_renewal");
  const std::int64_t n_eff = p.effective_N(start.x);
  validate_state(n_eff, p.M, start);
  if (start.absorbed) throw DomainError("lifetime_pmf_renewal: start is absorbed");
  const std::int64_t M = p.M;
  const bool boundary = start.x == 0 || start.x == n_eff;

  ExcursionLaw law = excursion_law(p.N, M, budget);
  DefectivePmf first = first_excursion_law(p, start, budget);
  const double theta = law.theta;
  const auto& f = law.durations.mass;
  const auto& f1 = first.mass;

  LifetimeLaw out;
  out.provenance = "renewal";
  out.pmf.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
  if (!boundary && start.e <= horizon) out.pmf[start.e] += first.defect;

  // u(n) = P(some partial sum of surviving excursions equals n).
  const std::int64_t len = horizon - (M + 1);
  if (len >= 0) {
    budget.require(static_cast<std::uint64_t>(len + 1) * static_cast<std::uint64_t>(M + 2),
                   "lifetime_pmf_renewal");
    std::vector<double> u(static_cast<std::size_t>(len) + 1, 0.0);
    u[0] = 1.0;
    const std::int64_t fmax = static_cast<std::int64_t>(f.size()) - 1;
    for (std::int64_t n = 1; n <= len; ++n) {
      double s = 0.0;
      for (std::int64_t j = 1; j <= std::min(n, fmax); ++j) s += f[j] * u[n - j];
      u[n] = s;
    }
    const std::int64_t gmax = static_cast<std::int64_t>(f1.size()) - 1;
    for (std::int64_t n = 0; n <= len; ++n) {
      double g;
      if (boundary) {
        g = u[n];
      } else {
        g = 0.0;
        for (std::int64_t j = 1; j <= std::min(n, gmax); ++j) g += f1[j] * u[n - j];
      }
      out.pmf[M + 1 + n] += theta * g;
    }
  }
  double s = 0.0;
  for (double v : out.pmf) s += v;
  out.residual = std::max(0.0, 1.0 - s);
  out.mean = expected_lifetime_exact(p, start, budget);
  return out;
}

double expected_lifetime_exact(const ModelParams& p, const WalkerState& start,
                               const WorkBudget& budget) {
  const std::int64_t n_eff = p.effective_N(start.x);
  validate_state(n_eff, p.M, start);
  if (start.absorbed) throw DomainError("expected_lifetime_exact: start is absorbed");
  const double M1 = static_cast<double>(p.M + 1);
  ExcursionLaw law = excursion_law(p.N, p.M, budget);
  // E[sigma_kappa] after one surviving re-entry is E[nu 1{nu<inf}] / theta (Wald).
  const double renewal = law.durations.mean_restricted() / law.theta;
  if (start.x == 0 || start.x == n_eff) return M1 + renewal;
  DefectivePmf first = first_excursion_law(p, start, budget);
  const double tz = first.defect;
  return tz * static_cast<double>(start.e) + (1.0 - tz) * M1 + first.mean_restricted() +
         (1.0 - tz) * renewal;
}

double compound_mgf(const ExcursionLaw& law, double s) {
  // 1 - psi computed as theta - sum expm1(s n) P(nu = n) to keep precision
  // when theta is tiny.
  double gap = law.theta;
  for (std::size_t n = 0; n < law.durations.mass.size(); ++n) {
    if (law.durations.mass[n] != 0.0)
      gap -= std::expm1(s * static_cast<double>(n)) * law.durations.mass[n];
  }
  if (!(gap > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "compound_mgf: (1 - theta) psi(s) = " << 1.0 - gap << " >= 1 at s = " << s;
    throw DomainError(os.str());
  }
  return law.theta / gap;
}

double compound_mgf(Length N, std::int64_t M, double s, const WorkBudget& budget) {
  return compound_mgf(excursion_law(N, M, budget), s);
}

}  // namespace ewalk
