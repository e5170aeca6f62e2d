#pragma once

#include <cstddef>
#include <functional>

namespace heatpade {

/// Worker count: HEATPADE_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
int default_thread_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = default).
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace heatpade
