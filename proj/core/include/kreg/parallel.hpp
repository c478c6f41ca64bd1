#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace kreg {

// Worker count: min(hardware concurrency, KREG_THREADS if set).
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KREG_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// Runs fn(i) for i in [0, n).  Work items must be independent; any result
// aggregation happens by index on the caller's side, so the outcome does not
// depend on scheduling.
inline void parallel_for(std::uint64_t n,
                         const std::function<void(std::uint64_t)>& fn) {
  const unsigned workers = std::min<std::uint64_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::uint64_t i = cursor.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace kreg
