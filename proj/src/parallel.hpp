#pragma once

// Deterministic index-parallel helper. Tasks write only to their own slot,
// so results are identical to sequential execution regardless of the thread
// count. DENSE_ANCHOR_THREADS caps the number of worker threads.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace danchor {

inline unsigned thread_cap() {
  static const unsigned cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("DENSE_ANCHOR_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1 && v < 1024) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
  }();
  return cached;
}

template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
  unsigned workers = std::min<std::size_t>(thread_cap(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace danchor
