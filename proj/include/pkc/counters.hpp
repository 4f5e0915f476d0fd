#pragma once

#include <cstdint>

namespace pkc {

/// Operation counters used by the scaling checks and the benchmark harness.
/// Counters are thread-local, so concurrent runs never interfere.
struct Counters {
    std::uint64_t comparisons = 0;      // every point/key comparison, including search probes
    std::uint64_t search_probes = 0;    // probes performed inside binary searches
    std::uint64_t binary_searches = 0;
    std::uint64_t distance_evals = 0;   // calls to dist_sq
    std::uint64_t decisions = 0;        // decision procedure invocations
    std::uint64_t matrix_touches = 0;   // implicit sorted-matrix entries evaluated
    std::uint64_t predicate_calls = 0;  // multi-array search predicate evaluations
};

Counters& counters() noexcept;
void reset_counters() noexcept;

} // namespace pkc
