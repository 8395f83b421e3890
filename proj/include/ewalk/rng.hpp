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

#ifndef EWALK_RNG_HPP_
#define EWALK_RNG_HPP_

#include <cstdint>

namespace ewalk {

namespace detail {
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Seed of run `index` within a batch. Streams depend only on (root, index),
// so batches come out the same under any scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return detail::mix64(root ^ detail::mix64(index + 0x632be59bd9b4e019ULL));
}

// Counter-based generator (splitmix64 output function over a Weyl sequence).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : counter_(seed) {}

  std::uint64_t next() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(counter_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  // One fair bit; draws 64 at a time.
  bool bit() {
    if (left_ == 0) {
      buf_ = next();
      left_ = 64;
    }
    bool b = buf_ & 1U;
    buf_ >>= 1;
    --left_;
    return b;
  }

 private:
  std::uint64_t counter_;
  std::uint64_t buf_ = 0;
  int left_ = 0;
};

}  // namespace ewalk

#endif  // EWALK_RNG_HPP_
