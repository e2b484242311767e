#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace corrgraph {

// Runs f(0..n_items-1) across `threads` workers. Callers write results into
// per-index slots, so the outcome is identical for any worker count.
template <class F>
void parallel_for(int n_items, int threads, F&& f) {
  if (threads < 1) threads = 1;
  if (threads > n_items) threads = n_items;
  if (threads <= 1) {
    for (int i = 0; i < n_items; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n_items; i = next.fetch_add(1)) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace corrgraph
