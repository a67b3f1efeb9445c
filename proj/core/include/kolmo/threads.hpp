#pragma once

#include <cstddef>
#include <functional>

namespace kolmo {

// Worker count: min(hardware_concurrency, KOLMO_THREADS) with a floor of 1.
unsigned thread_count();

// Splits [0, n) into contiguous chunks, one per worker. Chunk boundaries do not
// depend on the worker count observed at runtime beyond the count itself, and
// each chunk writes disjoint state, so results are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace kolmo
