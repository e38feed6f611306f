#pragma once

#include <cstddef>
#include <functional>

namespace helmscat::util {

// Runs fn(0..n-1) on up to `jobs` threads (0 = hardware concurrency).
// Results must be written to per-index slots; the first exception thrown by
// any worker is rethrown on the caller after all workers join.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace helmscat::util
