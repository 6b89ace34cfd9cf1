#pragma once

#include <cstddef>
#include <functional>

namespace rgkm {

/// Worker count: REFLECT_GKM_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(0..count-1) on up to `threads` workers. Every index runs
/// exactly once; the first exception thrown is rethrown after all workers
/// stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = worker_count());

}  // namespace rgkm
