#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hmmeb {

/// Worker-thread cap: HMMEB_THREADS when set and positive, otherwise the
/// hardware concurrency (at least 1).
inline int thread_cap() {
  if (const char* env = std::getenv("HMMEB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs body(i) for i in [0, count). Work items must be independent and
/// write only to their own output slot; assignment is by fixed stride, so
/// results never depend on the schedule.
template <typename F>
void parallel_for_index(std::size_t count, F&& body, int max_threads = 0) {
  const int cap = max_threads > 0 ? max_threads : thread_cap();
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(cap));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace hmmeb
