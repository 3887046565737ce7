#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace isospec {

// Global worker cap, set once by the CLI (--threads).  0 = hardware default.
inline int& thread_cap() {
  static int cap = 0;
  return cap;
}

inline int effective_threads() {
  int hw = int(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  int cap = thread_cap();
  return cap > 0 ? std::min(cap, hw) : hw;
}

// Index-parallel map.  Each index is computed independently and results are
// stored by index, so output is identical for any thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int nt = effective_threads();
  if (nt <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        cursor.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<std::size_t>(nt, n);
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace isospec
