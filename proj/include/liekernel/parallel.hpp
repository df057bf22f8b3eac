#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace liekernel {

/// Worker count: explicit request, else LIEKERNEL_THREADS, else hardware.
inline int worker_count(int requested = 0) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("LIEKERNEL_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return n <= 0 ? 1 : n;
}

/// Calls fn(i) for i in [0, count) on up to `threads` workers. Results must
/// be written to per-index slots. Rethrows the first exception.
template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
  const int workers = std::min(worker_count(threads), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace liekernel
