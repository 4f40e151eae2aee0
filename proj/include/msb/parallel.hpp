#pragma once

#include <cstddef>
#include <functional>

namespace msb {

// Number of worker threads (hardware concurrency, MSB_THREADS override).
int thread_count();

// Runs fn(i) for i in [0, n), splitting across threads. Calls made from
// inside a worker run inline, so nested use degrades to serial instead of
// oversubscribing. Results must be written to caller-owned slots indexed by
// i; reductions stay deterministic because callers combine in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace msb
