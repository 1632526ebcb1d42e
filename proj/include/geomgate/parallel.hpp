#pragma once

#include <cstddef>
#include <functional>

namespace geomgate {

// Worker count: GEOMGATE_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work is handed out dynamically, so callers must write
// results into slot i of a preallocated buffer to keep output order deterministic.
// The first exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Pairwise summation; the association order depends only on the length.
double tree_sum(const double* values, std::size_t n);

} // namespace geomgate
