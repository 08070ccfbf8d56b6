#pragma once

#include <cstddef>
#include <functional>

namespace wirecube {

/// Worker cap from WIRECUBE_THREADS (unset or 0 = hardware concurrency).
[[nodiscard]] std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Each
/// index runs exactly once; callers write results into per-index slots so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace wirecube
