#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace berglab {

/// 0 or negative -> hardware concurrency (at least 1).
int resolve_threads(int requested);

/// body(i) for i in [0, count), across at most `threads` workers.  The
/// partition is static and contiguous (worker k owns one block), so which
/// index runs where is a function of (count, threads) alone -- and since
/// bodies write only to per-index slots, the output is identical for every
/// thread count.  The first exception thrown by any body is rethrown on the
/// caller after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

/// Fixed-order pairwise reduction: halves the vector until one element is
/// left.  O(log n) error growth and one canonical association order, so
/// sums of parallel-computed slots never depend on the thread count.
double pairwise_sum(std::vector<double> xs);

}  // namespace berglab
