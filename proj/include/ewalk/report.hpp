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

#ifndef EWALK_REPORT_HPP_
#define EWALK_REPORT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ewalk {

enum class CheckKind { relative, absolute, upper_bound, interval, info };

const char* to_string(CheckKind k);
CheckKind check_kind_from_string(const std::string& s);

// The cell a comparison belongs to.
struct CellInfo {
  std::string regime;
  std::string N;
  std::int64_t M = 0;
  std::int64_t x0 = 0;
  std::int64_t y0 = 0;
  std::uint64_t runs = 0;
  std::uint64_t seed_root = 0;
};

// One observed-vs-theory comparison with the operation that produced the
// theoretical value and the acceptance rule.
struct Comparison {
  CellInfo cell;
  std::string statistic;
  std::string oracle;
  CheckKind kind = CheckKind::info;
  double observed = 0.0;
  double theoretical = 0.0;
  double tolerance = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool pass = true;
  double runtime_ms = 0.0;
};

// |observed - theoretical| <= tol * |theoretical|
Comparison check_relative(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double tol);
// |observed - theoretical| <= tol
Comparison check_absolute(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double tol);
// observed <= theoretical + tol
Comparison check_upper(const CellInfo& c, std::string stat, std::string oracle, double obs,
                       double theo, double tol);
// lo <= observed <= hi; theo is the reference point inside the interval
Comparison check_interval(const CellInfo& c, std::string stat, std::string oracle, double obs,
                          double theo, double lo, double hi);
Comparison info_row(const CellInfo& c, std::string stat, std::string oracle, double obs,
                    double theo);

struct RegimeReport {
  std::string regime;
  std::uint64_t seed_root = 0;
  std::vector<Comparison> rows;

  bool all_pass() const;
};

// Columns: regime,N,M,x0,y0,runs,statistic,observed,theoretical,tolerance,
// pass,seed_root,runtime_ms, then oracle,kind,lo,hi.
std::string to_csv(const RegimeReport& r);
std::string to_json(const RegimeReport& r);
RegimeReport report_from_json(const std::string& text);

// format is "csv" or "json"; an empty path or "-" writes to `out`.
void emit_report(const RegimeReport& r, const std::string& format, const std::string& path,
                 std::ostream& out);

// %.17g, with "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

}  // namespace ewalk

#endif  // EWALK_REPORT_HPP_
