#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace iwknot {

/// Worker count: IWKNOT_THREADS when set and positive, else the hardware
/// concurrency, never less than one.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Callers write
/// results into slot i, which keeps output order independent of scheduling.
/// If several indices throw, the exception from the smallest index wins.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace iwknot
