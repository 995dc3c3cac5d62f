#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ising {

// Runs task(chunk) for chunk in [0, chunk_count) on up to `threads` workers.
// Callers write per-chunk results into preallocated slots and combine them in
// chunk order afterwards, which keeps results independent of the worker count.
template <typename Task>
void for_each_chunk(std::size_t chunk_count, unsigned threads, Task&& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), chunk_count);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) task(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunk_count; c = next++) {
        try {
          task(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = chunk_count;
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ising
