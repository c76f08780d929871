#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace dpplab {

// Worker count taken from DPPLAB_THREADS, falling back to the hardware
// concurrency. Always >= 1.
unsigned thread_count();

// Runs body(i) for i in [0, count) on up to thread_count() threads with a
// static contiguous partition. Callers write results into slot i, so the
// reduction order is independent of scheduling. The first exception thrown
// by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Stateless stream derivation: distinct (seed, stream) pairs give
// well-separated 64-bit generator seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace dpplab
