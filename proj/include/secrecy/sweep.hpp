#pragma once

#include <cstddef>
#include <functional>

#include "secrecy/region.hpp"

namespace secrecy {

/// 0 maps to the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Convex hull of the union of region_of(i) over i in [0, count).
///
/// Work is cut into fixed-size chunks whose partial hulls are merged in
/// chunk order, so the result is identical for every thread count. An
/// exception thrown by region_of is rethrown on the calling thread.
Region2D union_hull(std::size_t count, const std::function<Region2D(std::size_t)>& region_of,
                    unsigned threads);

}  // namespace secrecy
