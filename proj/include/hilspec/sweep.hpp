#pragma once

#include <cstddef>
#include <functional>

namespace hilspec {

// Worker cap for sweep grids: HILBERT_SPECTRA_THREADS when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
std::size_t sweep_thread_cap();

// Runs body(0..count-1) across up to sweep_thread_cap() threads. Results
// must go into preallocated slots so merge order stays index order. The
// first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hilspec
