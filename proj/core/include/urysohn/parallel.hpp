#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace urysohn {

/// Worker count from URYSOHN_FORGE_WORKERS, else the hardware concurrency.
int default_workers();
void set_default_workers(int workers);

/// Calls fn(i) for i in [0, n) on up to `workers` threads. The first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  if (workers <= 0) workers = default_workers();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  std::vector<std::thread> threads;
  threads.reserve(count - 1);
  for (std::size_t t = 1; t < count; ++t) threads.emplace_back(body);
  body();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace urysohn
