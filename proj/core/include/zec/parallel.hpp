#pragma once

#include <cstddef>
#include <functional>

namespace zec {

/// Thread cap: value of ZEC_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1). Read once per process.
int thread_limit();

/// Runs f(i) for i in [0, count). Splits into contiguous chunks across at
/// most thread_limit() threads. Each index must write only its own slot of
/// any shared output, which keeps results independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace zec
