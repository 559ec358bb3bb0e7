#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace scfc {

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, count) on up to `workers` threads. Callers write
// results into slot i, so the reduction order is the index order regardless
// of scheduling. The first exception thrown by any body is rethrown.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                         unsigned workers = default_workers()) {
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace scfc
