#include "ridge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ridge {

int thread_cap() {
  const char* env = std::getenv("RIDGE_ANATOMY_THREADS");
  long cap = 0;
  if (env && *env) cap = std::strtol(env, nullptr, 10);
  if (cap <= 0) cap = static_cast<long>(std::thread::hardware_concurrency());
  if (cap <= 0) cap = 1;
  return static_cast<int>(cap);
}

void parallel_batches(std::int64_t n, std::int64_t batch_size,
                      const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (batch_size <= 0) batch_size = 1;
  const std::int64_t n_batches = (n + batch_size - 1) / batch_size;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(thread_cap(), n_batches));
  if (workers <= 1) {
    for (std::int64_t b = 0; b < n_batches; ++b)
      fn(b * batch_size, std::min(n, (b + 1) * batch_size));
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= n_batches) return;
      fn(b * batch_size, std::min(n, (b + 1) * batch_size));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace ridge
