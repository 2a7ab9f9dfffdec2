// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

// Deterministic work splitting: the job list is cut into fixed blocks that
// do not depend on the worker count, workers claim blocks in ascending
// order through an atomic cursor, and per-block results are combined in
// block order. Outputs are therefore byte-identical for any worker count.

#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace aspsc::detail {

/// Runs body(block_index) over [0, n_blocks) on up to `workers` threads.
/// body returns false to signal that later blocks are irrelevant (early
/// exit). Blocks are claimed in ascending order, so every block up to and
/// including the first one that returns false is guaranteed to complete;
/// blocks after a cancellation point may be skipped.
template <typename Body>
void for_each_block(std::size_t n_blocks, unsigned workers, Body&& body) {
  if (workers <= 1 || n_blocks <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) {
      if (!body(b)) return;
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> cancel_after{n_blocks};
  auto run = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= n_blocks || b > cancel_after.load()) return;
      if (!body(b)) {
        // Later blocks are irrelevant; keep the smallest cancellation point.
        std::size_t cur = cancel_after.load();
        while (b < cur && !cancel_after.compare_exchange_weak(cur, b)) {
        }
      }
    }
  };
  const unsigned n_threads = workers < n_blocks ? workers : static_cast<unsigned>(n_blocks);
  std::vector<std::thread> pool;
  pool.reserve(n_threads - 1);
  for (unsigned t = 0; t + 1 < n_threads; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace aspsc::detail
