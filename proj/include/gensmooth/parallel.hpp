#pragma once

#include <cstddef>
#include <functional>

namespace gensmooth {

/// Worker cap: GENSMOOTH_THREADS if set to a positive integer, otherwise the
/// hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to `threads` workers (0: worker_count()).
/// Calls made from inside a running parallel_for execute serially. If any
/// body throws, the exception from the lowest index is rethrown after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace gensmooth
