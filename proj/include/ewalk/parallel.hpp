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

#ifndef EWALK_PARALLEL_HPP_
#define EWALK_PARALLEL_HPP_

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ewalk {

// Runs f(i) for i in [0, n) on `threads` workers, striped by index. Callers
// write results into slot i, so output never depends on scheduling. If any
// call throws, the exception from the lowest failing index is rethrown.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::size_t> error_at(threads, n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += threads) {
          try {
            f(i);
          } catch (...) {
            errors[w] = std::current_exception();
            error_at[w] = i;
            return;
          }
        }
      });
    }
  }
  std::size_t first = n;
  unsigned who = 0;
  for (unsigned w = 0; w < threads; ++w) {
    if (error_at[w] < first) {
      first = error_at[w];
      who = w;
    }
  }
  if (first < n) std::rethrow_exception(errors[who]);
}

}  // namespace ewalk

#endif  // EWALK_PARALLEL_HPP_
