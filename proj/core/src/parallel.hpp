#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace lsm::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over a static partition of [0, count). Callers are
/// responsible for writing to disjoint output slots; the partition only
/// affects scheduling, never results.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (count == 0) return;
  std::size_t n_chunks = std::min<std::size_t>(threads, count);
  if (n_chunks <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_chunks);
  std::size_t base = count / n_chunks;
  std::size_t extra = count % n_chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::size_t len = base + (c < extra ? 1 : 0);
    workers.emplace_back([&fn, begin, len] { fn(begin, begin + len); });
    begin += len;
  }
  for (auto& w : workers) w.join();
}

}  // namespace lsm::detail
