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

#include "ewalk/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ewalk {

using nlohmann::json;

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"meagre.mean", 0.05},           // relative, E[lambda/M] vs g(0,1)
      {"meagre.var_lo", 1.2},          // interval for Var(lambda/M - 1)
      {"meagre.var_hi", 1.47},
      {"meagre.concentration", 0.95},  // a = inf proxy: fraction in [0.99, 1]
      {"meagre.atom", 0.03},           // absolute, atom mass at u
      {"meagre.mean_a", 0.05},         // relative, E[lambda/M] vs g(a,u)
      {"meagre.sigma", 4.0},           // standard errors for exact-vs-sample checks
      {"confined.ks", 0.07},
      {"confined.synthetic_ks", 0.05},
      {"confined.condition", 0.05},
      {"confined.cond_mean", 0.05},
      {"critical.mean", 0.05},
      {"critical.mgf", 0.05},
      {"critical.dG", 1e-6},
      {"critical.levy", 1e-6},
      {"critical.sigma", 4.0},
      {"sweep.meagre_lo", 1.8},
      {"sweep.meagre_hi", 2.2},
      {"sweep.critical", 0.10},
      {"validate.exact", 1e-12},
      {"validate.sigma", 4.0},
  };
  return t;
}

double tolerance(const ExperimentConfig& c, const std::string& key) {
  auto it = c.tol.find(key);
  if (it != c.tol.end()) return it->second;
  auto d = default_tolerances().find(key);
  if (d == default_tolerances().end()) throw ConfigError("unknown tolerance key '" + key + "'");
  return d->second;
}

namespace {

std::vector<json> as_list(const json& v) {
  if (v.is_array()) return std::vector<json>(v.begin(), v.end());
  return {v};
}

std::int64_t get_int(const std::string& key, const json& v) {
  if (!v.is_number_integer()) throw ConfigError("config key '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::uint64_t get_count(const std::string& key, const json& v) {
  std::int64_t x = get_int(key, v);
  if (x < 0) throw ConfigError("config key '" + key + "' must be non-negative");
  return static_cast<std::uint64_t>(x);
}

double get_real(const std::string& key, const json& v) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::string get_string(const std::string& key, const json& v) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

Length get_length(const std::string& key, const json& v) {
  if (v.is_string()) return Length::parse(v.get<std::string>());
  std::int64_t n = get_int(key, v);
  if (n < 1) throw ConfigError("config key '" + key + "' must be positive");
  return Length(n);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig c;
  for (const auto& [key, v] : doc.items()) {
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
      throw ConfigError("config key '" + key + "': values must be scalars or flat arrays");
    }
    if (key.rfind("tol.", 0) == 0) {
      std::string k = key.substr(4);
      if (!default_tolerances().count(k)) throw ConfigError("unknown config key '" + key + "'");
      c.tol[k] = get_real(key, v);
    } else if (key == "regime") {
      c.regime = get_string(key, v);
    } else if (key == "N") {
      for (const auto& x : as_list(v)) c.N.push_back(get_length(key, x));
    } else if (key == "M") {
      for (const auto& x : as_list(v)) c.M.push_back(get_int(key, x));
    } else if (key == "x0") {
      c.x0 = get_int(key, v);
    } else if (key == "y0") {
      c.y0 = get_int(key, v);
    } else if (key == "runs") {
      c.runs = get_count(key, v);
    } else if (key == "replicates") {
      c.replicates = get_count(key, v);
    } else if (key == "seed_root") {
      c.seed_root = get_count(key, v);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(get_count(key, v));
    } else if (key == "budget") {
      c.budget.max_work = static_cast<std::uint64_t>(get_real(key, v));
    } else if (key == "out") {
      c.out = get_string(key, v);
    } else if (key == "format") {
      c.format = get_string(key, v);
    } else if (key == "timing") {
      if (!v.is_boolean()) throw ConfigError("config key 'timing' must be a boolean");
      c.timing = v.get<bool>();
    } else if (key == "rho") {
      for (const auto& x : as_list(v)) c.rho.push_back(get_real(key, x));
    } else if (key == "rho_grid") {
      for (const auto& x : as_list(v)) c.rho_grid.push_back(get_real(key, x));
    } else if (key == "a") {
      for (const auto& x : as_list(v)) c.a.push_back(get_real(key, x));
    } else if (key == "u") {
      c.u = get_real(key, v);
    } else if (key == "a_inf_N") {
      c.a_inf_N = get_int(key, v);
    } else if (key == "a_inf_runs") {
      c.a_inf_runs = get_count(key, v);
    } else if (key == "sampler") {
      c.sampler = get_string(key, v);
    } else if (key == "synthetic_p") {
      c.synthetic_p = get_real(key, v);
    } else if (key == "synthetic_N") {
      c.synthetic_N = get_int(key, v);
    } else if (key == "synthetic_M") {
      c.synthetic_M = get_int(key, v);
    } else if (key == "synthetic_replicates") {
      c.synthetic_replicates = get_count(key, v);
    } else if (key == "meagre_threshold") {
      c.meagre_threshold = get_real(key, v);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void apply_defaults(ExperimentConfig& c) {
  static const std::set<std::string> regimes = {"meagre", "critical", "confined", "validate", "sweep"};
  if (!regimes.count(c.regime)) throw ConfigError("unknown regime '" + c.regime + "'");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
  if (c.sampler != "renewal" && c.sampler != "direct" && c.sampler != "auto")
    throw ConfigError("sampler must be renewal, direct or auto");
  if (c.threads == 0) c.threads = 1;

  if (c.regime == "meagre") {
    if (c.N.empty()) c.N = {Length::infinite()};
    if (c.M.empty()) c.M = {500};
    if (c.runs == 0) c.runs = 20000;
    if (c.a.empty()) c.a = {1.0};
    if (c.a_inf_N == 0) c.a_inf_N = 1000;
    if (c.a_inf_runs == 0) c.a_inf_runs = 2000;
    if (!(c.u > 0.0) || c.u > 1.0) throw ConfigError("u must lie in (0, 1]");
    for (Length n : c.N) {
      for (std::int64_t m : c.M) {
        if (n.is_finite()) {
          double r = static_cast<double>(m) / (static_cast<double>(n.value()) * n.value());
          if (r > c.meagre_threshold)
            throw ConfigError("meagre cell N=" + n.to_string() + ", M=" + std::to_string(m) +
                              " has M/N^2 above the meagre threshold");
        }
      }
    }
  } else if (c.regime == "confined") {
    if (c.N.empty()) c.N = {Length(8)};
    if (c.M.empty()) c.M = {128};
    if (c.replicates == 0) c.replicates = 500;
    if (c.synthetic_p == 0.0) c.synthetic_p = 1e-4;
    if (c.synthetic_N == 0) c.synthetic_N = 30;
    if (c.synthetic_M == 0) c.synthetic_M = 10 * c.synthetic_N * c.synthetic_N;
    if (c.synthetic_replicates == 0) c.synthetic_replicates = 1000;
    for (Length n : c.N)
      if (n.is_infinite()) throw ConfigError("confined cells need finite N");
    if (!(c.synthetic_p > 0.0) || c.synthetic_p >= 1.0) throw ConfigError("synthetic_p must lie in (0, 1)");
  } else if (c.regime == "critical") {
    if (c.N.empty()) c.N = {Length(40)};
    if (c.rho.empty()) c.rho = {1.0};
    if (c.rho_grid.empty()) c.rho_grid = {0.25, 1.0, 4.0};
    if (c.runs == 0) c.runs = 2000;
    for (Length n : c.N)
      if (n.is_infinite()) throw ConfigError("critical cells need finite N");
    for (double r : c.rho)
      if (!(r > 0.0)) throw ConfigError("rho must be positive");
  } else if (c.regime == "sweep") {
    if (c.N.empty()) c.N = {Length(20), Length(40), Length(100), Length(200)};
    if (c.M.empty()) c.M = {100, 400, 1600};
    for (Length n : c.N)
      if (n.is_infinite()) throw ConfigError("sweep cells need finite N");
  } else if (c.regime == "validate") {
    if (c.runs == 0) c.runs = 100000;
  }
  for (std::int64_t m : c.M)
    if (m < 1) throw ConfigError("M must be >= 1");
  for (Length n : c.N)
    if (n.is_finite() && n.value() < 3) throw ConfigError("N must be >= 3");
}

}  // namespace ewalk
