#include "msb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace msb {

namespace {
thread_local bool g_in_worker = false;
}

int thread_count() {
  static const int count = [] {
    if (const char* env = std::getenv("MSB_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return count;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = thread_count();
  if (n == 0) return;
  if (g_in_worker || workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    g_in_worker = true;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load(std::memory_order_relaxed)) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
    g_in_worker = false;
  };
  const int spawn = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(workers), n));
  std::vector<std::thread> pool;
  pool.reserve(spawn - 1);
  for (int w = 1; w < spawn; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace msb
