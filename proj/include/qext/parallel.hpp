#pragma once

#include <cstddef>
#include <functional>

namespace qext {

/// Worker count: explicit request > QEXTEND_THREADS env > hardware concurrency.
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Results are
/// deterministic as long as fn(i) writes only to its own slot i.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace qext
