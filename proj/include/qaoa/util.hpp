// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace qaoa {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(begin, end) over [0, n) split into contiguous chunks, one worker
/// thread per chunk. fn must be safe to call concurrently.
inline void parallel_chunks(std::int64_t n, int threads,
                            const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2) {
    fn(0, n, 0);
    return;
  }
  if (threads > n) threads = static_cast<int>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    std::int64_t begin = n * t / threads;
    std::int64_t end = n * (t + 1) / threads;
    pool.emplace_back([&fn, begin, end, t] { fn(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qaoa
