// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace risbound::detail {

inline int resolve_workers(int workers, int item_count) {
  if (workers <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    workers = hc == 0 ? 1 : static_cast<int>(hc);
  }
  return std::max(1, std::min(workers, item_count));
}

/// Runs fn(lo, hi) over a static contiguous partition of [0, n). Results
/// must be written to per-index storage by the callee; this keeps the
/// outcome independent of the worker count. The lowest-indexed worker's
/// exception is rethrown.
inline void parallel_blocks(int n, int workers,
                            const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  const int w = resolve_workers(workers, n);
  if (w == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w), nullptr);
  const int base = n / w, extra = n % w;
  int lo = 0;
  for (int i = 0; i < w; ++i) {
    const int hi = lo + base + (i < extra ? 1 : 0);
    threads.emplace_back([&fn, &errors, i, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace risbound::detail
