#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace f3 {

inline unsigned default_workers() {
  if (const char* env = std::getenv("F3_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return unsigned(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

// Static chunking over [0, n); fn(i) must be safe to run concurrently.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn,
                         unsigned workers = 0) {
  if (workers == 0) workers = default_workers();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; i++) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; w++) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace f3
