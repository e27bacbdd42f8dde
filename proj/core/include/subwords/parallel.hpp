#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace subwords {

/// Worker count for range sweeps: the SUBWORD_THREADS environment variable
/// when set, otherwise 1. Sweeps stay deterministic regardless of the count.
inline unsigned sweep_workers() {
  if (const char* env = std::getenv("SUBWORD_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Splits [begin, end) into contiguous chunks, one per worker, and runs
/// fn(lo, hi, worker_index) on each. Results must be merged by the caller;
/// merging per worker index keeps the outcome order-independent.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, Fn&& fn,
                     unsigned workers = sweep_workers()) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  if (workers <= 1 || total < 2 * workers) {
    fn(begin, end, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = (w + 1 == workers) ? end : lo + chunk;
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace subwords
