#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gaussalg {

/// Runs body(i) for i in [0, n) on up to `threads` workers.  Tasks are pulled
/// from a shared counter; callers that write results into slot i obtain
/// output independent of the worker count.
template <class F>
void parallel_for(std::size_t n, int threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(err_mu);
        if (!err) err = std::current_exception();
        failed.store(true);
      }
    }
  };
  const std::size_t k = std::min(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (std::size_t t = 0; t < k; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace gaussalg
