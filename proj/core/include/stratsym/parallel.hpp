#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace stratsym {

/// Worker count: STRATSYM_THREADS env var if set, else hardware
/// concurrency, else 1.
int default_thread_count();

/// Applies `fn` to 0..count-1 across `threads` workers. Results are
/// stored by index, so the merged output order is deterministic no
/// matter how work interleaves.
template <typename Result>
std::vector<Result> parallel_map(int count, const std::function<Result(int)>& fn, int threads) {
  std::vector<Result> results(count);
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  int n = std::min(threads, count);
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace stratsym
