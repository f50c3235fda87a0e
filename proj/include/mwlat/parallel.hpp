#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mwlat {

/// Runs fn(0..count-1) on up to `workers` threads. Results must be written to
/// preallocated per-index slots so the merge order is independent of thread
/// scheduling. Rethrows the first exception after all threads join.
inline void parallel_for(int count, int workers,
                         const std::function<void(int)>& fn) {
  if (workers < 1) workers = 1;
  if (workers > count) workers = count < 1 ? 1 : count;
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mwlat
