#pragma once

// Partition-and-reduce helper. Work is split into numbered partitions that
// are processed independently; callers merge per-partition results in
// partition order so the outcome never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rankone {

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

template <typename Fn>
void for_each_partition(std::size_t parts, unsigned workers, Fn&& fn) {
  if (parts == 0) return;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(parts, 1024)));
  if (workers == 1) {
    for (std::size_t i = 0; i < parts; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < parts; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = parts;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace rankone
