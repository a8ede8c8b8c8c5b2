#pragma once

#include <cstddef>
#include <functional>

namespace lelong {

/// Hardware concurrency, capped by LELONG_THREADS when that is set to a
/// positive integer.
int thread_count();

/// Runs fn(i) for i in [0, n) on up to thread_count() threads. Each index is
/// handled exactly once, so writing to slot i of a pre-sized buffer keeps
/// results independent of scheduling. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lelong
