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

#ifndef EWALK_TYPES_HPP_
#define EWALK_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ewalk {

// Error hierarchy. Everything the library throws derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested work (DP cells, simulation steps, path count) exceeds the budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A simulated run did not reach extinction within the hard step cap.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(const std::string& what, std::uint64_t run_index)
      : Error(what), run_index_(run_index) {}
  std::uint64_t run_index() const { return run_index_; }

 private:
  std::uint64_t run_index_;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Length of the lattice interval {0, ..., N}; N may be infinite (the half-line).
class Length {
 public:
  constexpr explicit Length(std::int64_t n) : n_(n) {}
  static constexpr Length infinite() { return Length(kInf); }

  constexpr bool is_infinite() const { return n_ == kInf; }
  constexpr bool is_finite() const { return n_ != kInf; }

  // Finite value; throws on the half-line.
  std::int64_t value() const {
    if (is_infinite()) throw DomainError("Length::value() on infinite interval");
    return n_;
  }

  // Value for ordering/comparison; infinite maps to int64 max.
  constexpr std::int64_t raw() const { return n_; }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(n_);
  }

  // Parses "inf", "infinity" or a decimal integer.
  static Length parse(const std::string& text);

  friend constexpr bool operator==(Length a, Length b) { return a.n_ == b.n_; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::int64_t n_;
};

// Cap on abstract work units (DP cell updates, simulation steps).
struct WorkBudget {
  std::uint64_t max_work = 50'000'000'000ULL;
  std::uint64_t max_entries = 50'000'000ULL;  // length cap for stored tables

  void require(std::uint64_t work, const std::string& what) const {
    if (work > max_work) {
      throw BudgetExceeded(what + ": needs " + std::to_string(work) +
                           " work units, budget is " + std::to_string(max_work));
    }
  }

  void require_entries(std::uint64_t n, const std::string& what) const {
    if (n > max_entries) {
      throw BudgetExceeded(what + ": table of " + std::to_string(n) + " entries exceeds cap " +
                           std::to_string(max_entries));
    }
  }
};

}  // namespace ewalk

#endif  // EWALK_TYPES_HPP_
