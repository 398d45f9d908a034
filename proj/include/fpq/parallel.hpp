#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace fpq {

/// Worker count: FPQ_THREADS if set and positive, else the hardware count.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("FPQ_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {
inline thread_local bool inside_worker = false;
}

/// Calls f(i) for i in [0, n) on up to worker_count() threads. Callers write
/// results into per-index slots, so the outcome does not depend on scheduling.
/// The first exception thrown is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  // Nested calls run serially on the calling worker.
  const std::size_t workers = detail::inside_worker ? 1 : std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    detail::inside_worker = true;
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fpq
