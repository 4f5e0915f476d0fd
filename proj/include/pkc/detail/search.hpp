#pragma once

#include <cstddef>

#include "pkc/counters.hpp"

namespace pkc::detail {

// First index in [lo, hi) where pred turns false; pred must be true-then-false.
template <class Pred>
std::size_t partition_point_counted(std::size_t lo, std::size_t hi, Pred pred) {
    Counters& c = counters();
    ++c.binary_searches;
    std::size_t count = hi - lo;
    while (count > 0) {
        const std::size_t step = count / 2;
        const std::size_t mid = lo + step;
        ++c.search_probes;
        ++c.comparisons;
        if (pred(mid)) {
            lo = mid + 1;
            count -= step + 1;
        } else {
            count = step;
        }
    }
    return lo;
}

} // namespace pkc::detail
