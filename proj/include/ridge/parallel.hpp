#pragma once

#include <cstdint>
#include <functional>

namespace ridge {

// Thread cap: RIDGE_ANATOMY_THREADS, with 0 or unset meaning "auto"
// (hardware concurrency).
int thread_cap();

// Runs fn(begin, end) over [0, n) split into fixed-size batches. Batch
// boundaries do not depend on the thread count, so any per-index work that
// writes only to its own slots is deterministic.
void parallel_batches(std::int64_t n, std::int64_t batch_size,
                      const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace ridge
