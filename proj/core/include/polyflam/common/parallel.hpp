#pragma once

#include <cstddef>
#include <functional>

namespace polyflam {

// Runs fn(i) for i in [0, n) across `workers` threads. Results must be written
// to caller-owned, index-addressed storage; the schedule never affects output
// order. The first exception thrown by fn is rethrown on the calling thread
// after all workers join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace polyflam
