#pragma once

#include <cstddef>
#include <functional>

namespace qlgraph {

/// Worker count: QLGRAPH_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls body(i) for every i in [0, count) on up to thread_count() threads.
/// The first exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qlgraph
