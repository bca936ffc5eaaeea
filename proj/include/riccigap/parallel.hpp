#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace riccigap {

/// Worker-count resolution: explicit request, else RICCI_GAP_THREADS, else
/// hardware concurrency. Always at least 1.
int resolve_thread_count(int requested = 0);

/// Runs body(i) for i in [0, n). Work is handed out through a shared atomic
/// counter in fixed-size chunks; callers must write results into per-index
/// slots so the output does not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, int threads = 0) {
  const int workers = resolve_thread_count(threads);
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const std::size_t chunk = std::max<std::size_t>(1, n / (8 * static_cast<std::size_t>(workers)));
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t begin = cursor.fetch_add(chunk);
        if (begin >= n || failed.load()) return;
        const std::size_t end = std::min(n, begin + chunk);
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace riccigap
