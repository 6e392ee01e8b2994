#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gatesynth {

/// Chunked parallel loop over [0, n). Workers pull disjoint index ranges, so
/// the body may write to per-index slots without synchronization. Falls back
/// to a plain loop for small n.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& body, std::size_t grain = 256) {
  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, 8);
  if (workers <= 1 || n <= grain) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(grain);
      if (begin >= n) return;
      const std::size_t end = std::min(begin + grain, n);
      for (std::size_t i = begin; i < end; ++i) body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
}

}  // namespace gatesynth
