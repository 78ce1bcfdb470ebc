#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace nrcdt {

// Runs body(i) for i in [0, n) on up to n_threads workers.  Each index owns
// its preallocated output slot, so results are identical for any thread
// count.
inline void parallel_for(int n, int n_threads,
                         const std::function<void(int)>& body) {
  if (n <= 0) return;
  n_threads = std::max(1, std::min(n_threads, n));
  if (n_threads == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t)
    workers.emplace_back([&, t] {
      for (int i = t; i < n; i += n_threads) body(i);
    });
  for (auto& w : workers) w.join();
}

// --threads default: NRCDT_THREADS environment variable, else 1.
inline int default_thread_count() {
  if (const char* env = std::getenv("NRCDT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

}  // namespace nrcdt
