#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace irsmatch {

// Worker count: IRS_MATCHSEL_THREADS if set, else hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("IRS_MATCHSEL_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n > 64 ? 64 : n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw > 64 ? 64 : hw);
}

// Index-strided parallel loop. Work items must be independent; callers get
// determinism by writing into per-index slots and reducing serially.
template <typename F>
void parallel_for(int n, F&& f) {
  const int workers = std::min(worker_count(), n < 1 ? 1 : n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&f, t, n, workers] {
      for (int i = t; i < n; i += workers) f(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace irsmatch
