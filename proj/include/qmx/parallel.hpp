#pragma once

// Worker pool for per-cell loops. Ranges are contiguous and disjoint, and
// every cell is written by exactly one worker from inputs that are read-only
// during the loop, so results are bit-identical for any worker count.
// Reductions never go through here; they stay sequential.

#include <cstddef>
#include <functional>

namespace qmx {

void set_worker_count(int n);
int worker_count();

// body(begin, end) is invoked once per worker with a sub-range of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qmx
