#pragma once

#include <cstddef>
#include <functional>

namespace ipsim {

/// Global worker count for parallel sections (CLI --threads). 0 = hardware.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs fn(i) for i in [0, n) on up to thread_count() workers using a static
/// block partition. Results must be written to disjoint, pre-sized slots so
/// that output never depends on scheduling; reductions are performed by the
/// caller in index order afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace ipsim
