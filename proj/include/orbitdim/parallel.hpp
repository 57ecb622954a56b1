// Index-parallel loop with a configurable worker count.

#pragma once

#include <cstddef>
#include <functional>

namespace orbitdim {

/// Worker count from ORBITDIM_THREADS (default 1, clamped to >= 1).
std::size_t default_thread_count();

/// Calls body(i) for i in [0, n). Iterations must write to disjoint outputs.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads = default_thread_count());

}  // namespace orbitdim
