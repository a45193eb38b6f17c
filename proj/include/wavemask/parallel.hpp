#pragma once

#include <cstddef>
#include <functional>

namespace wavemask {

// Thread budget for data-parallel loops: WAVEMASK_THREADS if set (clamped to
// [1, 256]), otherwise hardware concurrency.
int thread_budget();

// Runs fn(0) ... fn(count-1) across the thread budget. Each index must touch
// only its own outputs; completion order is unspecified, so callers reduce
// in index order afterwards.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace wavemask
