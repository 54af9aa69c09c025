#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace crs::parallel {

/// Worker count: CRS_THREADS if set to a positive integer, else hardware concurrency.
unsigned thread_count();

/// Calls fn(i) exactly once for each i in [0, count). Indices are split into
/// contiguous blocks, one per worker; callers write results into slot i so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any call is rethrown on the calling thread.
template <class F>
void for_each_index(std::size_t count, F&& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace crs::parallel
