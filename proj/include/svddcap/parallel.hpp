#ifndef SVDDCAP_PARALLEL_HPP
#define SVDDCAP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace svddcap {

/// Worker cap from the SVDDCAP_THREADS environment variable (>= 1).
/// Unset or unparsable values fall back to the hardware concurrency.
unsigned max_workers();

/// Clamp a requested worker count to [1, max_workers()].
unsigned effective_workers(unsigned requested);

/// Run fn(begin, end) over contiguous chunks of [0, count) on up to
/// `workers` threads. Chunks are disjoint, so workers may write to disjoint
/// slots of shared output without synchronization; results must not depend
/// on the chunk layout.
void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace svddcap

#endif  // SVDDCAP_PARALLEL_HPP
