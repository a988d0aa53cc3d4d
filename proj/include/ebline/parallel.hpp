#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace ebline {

/// Run f(0..n-1) across hardware threads. Results must be written to
/// index-addressed slots by the caller; the first exception is rethrown
/// after all workers join.
template <typename F>
void parallel_for(int n, F&& f, unsigned max_threads = 0) {
  if (n <= 0) return;
  unsigned hw = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  auto body = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        f(i);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ebline
