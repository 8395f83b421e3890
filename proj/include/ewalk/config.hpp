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

#ifndef EWALK_CONFIG_HPP_
#define EWALK_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ewalk/types.hpp"

namespace ewalk {

// Flat experiment description. Empty vectors and zero counts mean "use the
// regime default"; apply_defaults() fills them in.
struct ExperimentConfig {
  std::string regime = "validate";  // meagre | critical | confined | validate | sweep
  std::vector<Length> N;
  std::vector<std::int64_t> M;
  std::int64_t x0 = -1;  // -1: site 1
  std::int64_t y0 = -1;  // -1: full capacity M
  std::uint64_t runs = 0;
  std::uint64_t replicates = 0;
  std::uint64_t seed_root = 20240917;
  unsigned threads = 1;
  WorkBudget budget;
  std::string out;
  std::string format = "csv";
  bool timing = false;

  std::vector<double> rho;       // critical cells
  std::vector<double> rho_grid;  // critical mu monotonicity grid
  std::vector<double> a;         // meagre cells with x0 ~ sqrt(a M)
  double u = 1.0;
  std::int64_t a_inf_N = 0;      // meagre a = infinity proxy interval
  std::uint64_t a_inf_runs = 0;

  std::string sampler = "renewal";  // confined: renewal | direct | auto
  double synthetic_p = 0.0;
  std::int64_t synthetic_N = 0;
  std::int64_t synthetic_M = 0;
  std::uint64_t synthetic_replicates = 0;

  double meagre_threshold = 0.01;
  std::map<std::string, double> tol;  // keys without the "tol." prefix
};

// Known tolerance keys and their defaults.
const std::map<std::string, double>& default_tolerances();
double tolerance(const ExperimentConfig& c, const std::string& key);

// Parses a flat JSON object. Unknown keys and wrong types raise ConfigError.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// Fills unset fields with the regime's defaults and validates the result.
void apply_defaults(ExperimentConfig& c);

}  // namespace ewalk

#endif  // EWALK_CONFIG_HPP_
