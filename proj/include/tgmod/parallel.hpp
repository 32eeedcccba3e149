/*
 *   Copyright 2026 the tgmod authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGMOD_PARALLEL_HPP
#define TGMOD_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace tgmod {

/// Deterministic violation scan over a linearized tuple space.
///
/// Workers partition [0, total) into contiguous ranges and each records its
/// locally smallest violating index; the merge takes the global minimum, so
/// the reported witness does not depend on the worker count. An atomic bound
/// lets workers skip work that can no longer matter.
inline std::optional<std::size_t> scan_first_violation(
    std::size_t total, const std::function<bool(std::size_t)>& ok,
    unsigned workers = 1) {
  if (total == 0) return std::nullopt;
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }
  const std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best(kNone);
  unsigned n = workers;
  if (static_cast<std::size_t>(n) > total) n = static_cast<unsigned>(total);
  std::vector<std::thread> pool;
  pool.reserve(n);
  const std::size_t chunk = (total + n - 1) / n;
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&, w]() {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(total, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) <= lo) return;
        if (!ok(i)) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;  // nothing later in this chunk can beat i
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::size_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

}  // namespace tgmod

#endif  // TGMOD_PARALLEL_HPP
