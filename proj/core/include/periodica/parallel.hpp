#pragma once

#include <cstddef>
#include <functional>

namespace periodica {

// Worker cap: min(PERIODICA_THREADS, hardware_concurrency), at least 1.
int max_threads();

// Runs fn over [0, n) split into contiguous per-worker ranges. Workers write
// to disjoint data only; results must not depend on the partition, so any
// reduction happens after the join, in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace periodica
