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

#include "ewalk/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ewalk/types.hpp"

namespace ewalk {

using nlohmann::json;

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::relative: return "relative";
    case CheckKind::absolute: return "absolute";
    case CheckKind::upper_bound: return "upper_bound";
    case CheckKind::interval: return "interval";
    case CheckKind::info: return "info";
  }
  return "info";
}

CheckKind check_kind_from_string(const std::string& s) {
  if (s == "relative") return CheckKind::relative;
  if (s == "absolute") return CheckKind::absolute;
  if (s == "upper_bound") return CheckKind::upper_bound;
  if (s == "interval") return CheckKind::interval;
  if (s == "info") return CheckKind::info;
  throw ConfigError("unknown check kind '" + s + "'");
}

namespace {

Comparison base(const CellInfo& c, std::string stat, std::string oracle, CheckKind k, double obs,
                double theo) {
  Comparison r;
  r.cell = c;
  r.statistic = std::move(stat);
  r.oracle = std::move(oracle);
  r.kind = k;
  r.observed = obs;
  r.theoretical = theo;
  return r;
}

// NaN fails every comparison below, which is what we want.
bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

}  // namespace

Comparison check_relative(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double tol) {
  Comparison r = base(c, std::move(stat), std::move(oracle), CheckKind::relative, obs, theo);
  r.tolerance = tol;
  r.lo = theo - tol * std::abs(theo);
  r.hi = theo + tol * std::abs(theo);
  r.pass = within(obs, r.lo, r.hi);
  return r;
}

Comparison check_absolute(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double tol) {
  Comparison r = base(c, std::move(stat), std::move(oracle), CheckKind::absolute, obs, theo);
  r.tolerance = tol;
  r.lo = theo - tol;
  r.hi = theo + tol;
  r.pass = within(obs, r.lo, r.hi);
  return r;
}

Comparison check_upper(const CellInfo& c, std::string stat, std::string oracle, double obs,
                       double theo, double tol) {
  Comparison r = base(c, std::move(stat), std::move(oracle), CheckKind::upper_bound, obs, theo);
  r.tolerance = tol;
  r.lo = -std::numeric_limits<double>::infinity();
  r.hi = theo + tol;
  r.pass = obs <= r.hi;
  return r;
}

Comparison check_interval(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double lo, double hi) {
  Comparison r = base(c, std::move(stat), std::move(oracle), CheckKind::interval, obs, theo);
  r.tolerance = 0.5 * (hi - lo);
  r.lo = lo;
  r.hi = hi;
  r.pass = within(obs, lo, hi);
  return r;
}

Comparison info_row(const CellInfo& c, std::string stat, std::string oracle, double obs,
                    double theo) {
  Comparison r = base(c, std::move(stat), std::move(oracle), CheckKind::info, obs, theo);
  r.tolerance = std::numeric_limits<double>::quiet_NaN();
  r.lo = r.hi = std::numeric_limits<double>::quiet_NaN();
  r.pass = true;
  return r;
}

bool RegimeReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);  // JSON has no NaN/inf literals
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ConfigError("bad number '" + s + "' in report");
}

}  // namespace

std::string to_csv(const RegimeReport& r) {
  std::ostringstream os;
  os << "regime,N,M,x0,y0,runs,statistic,observed,theoretical,tolerance,pass,seed_root,runtime_ms,"
        "oracle,kind,lo,hi\n";
  for (const auto& c : r.rows) {
    os << csv_field(c.cell.regime) << ',' << csv_field(c.cell.N) << ',' << c.cell.M << ','
       << c.cell.x0 << ',' << c.cell.y0 << ',' << c.cell.runs << ',' << csv_field(c.statistic)
       << ',' << format_number(c.observed) << ',' << format_number(c.theoretical) << ','
       << format_number(c.tolerance) << ',' << (c.pass ? "true" : "false") << ','
       << c.cell.seed_root << ',' << format_number(c.runtime_ms) << ',' << csv_field(c.oracle)
       << ',' << to_string(c.kind) << ',' << format_number(c.lo) << ',' << format_number(c.hi)
       << '\n';
  }
  return os.str();
}

std::string to_json(const RegimeReport& r) {
  json rows = json::array();
  for (const auto& c : r.rows) {
    rows.push_back(json{{"regime", c.cell.regime},
                        {"N", c.cell.N},
                        {"M", c.cell.M},
                        {"x0", c.cell.x0},
                        {"y0", c.cell.y0},
                        {"runs", c.cell.runs},
                        {"statistic", c.statistic},
                        {"observed", number_json(c.observed)},
                        {"theoretical", number_json(c.theoretical)},
                        {"tolerance", number_json(c.tolerance)},
                        {"pass", c.pass},
                        {"seed_root", c.cell.seed_root},
                        {"runtime_ms", number_json(c.runtime_ms)},
                        {"oracle", c.oracle},
                        {"kind", to_string(c.kind)},
                        {"lo", number_json(c.lo)},
                        {"hi", number_json(c.hi)}});
  }
  json doc{{"regime", r.regime}, {"seed_root", r.seed_root}, {"all_pass", r.all_pass()},
           {"rows", rows}};
  return doc.dump(2) + "\n";
}

RegimeReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report JSON: ") + e.what());
  }
  try {
    RegimeReport r;
    r.regime = doc.at("regime").get<std::string>();
    r.seed_root = doc.at("seed_root").get<std::uint64_t>();
    for (const auto& j : doc.at("rows")) {
      Comparison c;
      c.cell.regime = j.at("regime").get<std::string>();
      c.cell.N = j.at("N").get<std::string>();
      c.cell.M = j.at("M").get<std::int64_t>();
      c.cell.x0 = j.at("x0").get<std::int64_t>();
      c.cell.y0 = j.at("y0").get<std::int64_t>();
      c.cell.runs = j.at("runs").get<std::uint64_t>();
      c.cell.seed_root = j.at("seed_root").get<std::uint64_t>();
      c.statistic = j.at("statistic").get<std::string>();
      c.oracle = j.at("oracle").get<std::string>();
      c.kind = check_kind_from_string(j.at("kind").get<std::string>());
      c.observed = number_from_json(j.at("observed"));
      c.theoretical = number_from_json(j.at("theoretical"));
      c.tolerance = number_from_json(j.at("tolerance"));
      c.lo = number_from_json(j.at("lo"));
      c.hi = number_from_json(j.at("hi"));
      c.pass = j.at("pass").get<bool>();
      c.runtime_ms = number_from_json(j.at("runtime_ms"));
      r.rows.push_back(std::move(c));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report JSON: ") + e.what());
  }
}

void emit_report(const RegimeReport& r, const std::string& format, const std::string& path,
                 std::ostream& out) {
  std::string text;
  if (format == "csv") text = to_csv(r);
  else if (format == "json") text = to_json(r);
  else throw ConfigError("unknown format '" + format + "' (csv or json)");
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw Error("write failed for '" + path + "'");
}

}  // namespace ewalk
