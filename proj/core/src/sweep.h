// Copyright 2026 The mexc Authors.
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

// Deterministic parallel first-failure search. Internal to mexc_core.

#ifndef MEXC_SRC_SWEEP_H_
#define MEXC_SRC_SWEEP_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace mexc::internal {

// Evaluates probe(k) for k in [0, count) and returns the result for the
// smallest k whose probe returns a value. Workers pull indices in increasing
// order and stop once every remaining index exceeds the best failure seen,
// so the answer equals the sequential one for any thread count.
template <typename T, typename Probe>
std::optional<T> FirstFailure(std::size_t count, int threads, Probe&& probe) {
  if (threads <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) {
      if (std::optional<T> r = probe(k)) return r;
    }
    return std::nullopt;
  }
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::vector<std::optional<T>> found(workers);
  std::vector<std::size_t> found_at(workers, count);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](std::size_t w) {
    try {
      while (true) {
        std::size_t k = next.fetch_add(1);
        if (k >= count || k >= best.load()) return;
        if (std::optional<T> r = probe(k)) {
          found[w] = std::move(r);
          found_at[w] = k;
          std::size_t current = best.load();
          while (k < current && !best.compare_exchange_weak(current, k)) {
          }
          return;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::size_t winner = workers;
  for (std::size_t w = 0; w < workers; ++w) {
    if (found_at[w] < count &&
        (winner == workers || found_at[w] < found_at[winner])) {
      winner = w;
    }
  }
  if (winner == workers) return std::nullopt;
  return std::move(found[winner]);
}

}  // namespace mexc::internal

#endif  // MEXC_SRC_SWEEP_H_
