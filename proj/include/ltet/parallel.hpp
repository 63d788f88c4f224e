#pragma once

#include <cstddef>
#include <functional>

namespace ltet {

unsigned resolve_threads(unsigned requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Work items are
// claimed dynamically; the caller merges per-item results in index order.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace ltet
