#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace br1 {

/// Runs f(i) for i in [0, count) over `threads` workers with a fixed contiguous
/// partition. Each index writes only its own output, so the result does not
/// depend on the thread count. The first exception (lowest chunk) is rethrown.
template <typename F> void parallel_for(int count, int threads, F&& f) {
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  const int chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        const int end = std::min(count, (t + 1) * chunk);
        for (int i = t * chunk; i < end; ++i) f(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

} // namespace br1
