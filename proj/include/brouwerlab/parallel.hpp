#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace brouwerlab {

/// Execution settings threaded through the exhaustive checks.
struct Exec {
  unsigned jobs = 1;
};

/// Smallest i in [0, n) with pred(i), or nullopt. The result is the same for
/// every job count: workers scan disjoint blocks in order and only the
/// minimum hit survives.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t n, const Exec& exec, Pred pred) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const unsigned jobs = std::max(1u, exec.jobs);
  if (jobs == 1 || n < 4096) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  // Blocks are small relative to n so early hits cut the scan short.
  const std::uint64_t block = std::max<std::uint64_t>(1024, n / (std::uint64_t{jobs} * 16));
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{kNone};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t start = next_block.fetch_add(block);
      if (start >= n || start >= best.load(std::memory_order_relaxed)) return;
      const std::uint64_t end = std::min(n, start + block);
      for (std::uint64_t i = start; i < end; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) return;
        if (pred(i)) {
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();
  const std::uint64_t hit = best.load();
  if (hit == kNone) return std::nullopt;
  return hit;
}

/// Runs body(i) for every i in [0, n), split across exec.jobs threads.
template <class Body>
void parallel_for(std::uint64_t n, const Exec& exec, Body body) {
  const unsigned jobs = std::max(1u, exec.jobs);
  if (jobs == 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
}

}  // namespace brouwerlab
