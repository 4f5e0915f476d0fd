#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "pkc/counters.hpp"
#include "pkc/detail/search.hpp"
#include "pkc/error.hpp"

namespace pkc {

/// Smallest value in the union of t nondecreasing arrays on which a monotone
/// (false-then-true) predicate holds.
///
/// Array i has `lengths[i]` elements and element j is `value_at(i, j)`; the
/// arrays are never materialised. Each round picks the weighted median of the
/// active-range medians (weights = active lengths), evaluates the predicate
/// once, and clips every active range by binary search. Elements are ordered
/// by (value, i, j), so each round discards at least a quarter of the active
/// elements: O(log total) predicate calls and O(t log^2 total) work.
///
/// Throws Error(NotFound) when the predicate is false everywhere.
template <class ValueAt, class Pred>
double multi_array_search(std::span<const std::size_t> lengths, ValueAt value_at, Pred pred) {
    struct Key {
        double value;
        std::size_t array;
        std::size_t index;

        bool operator<(const Key& o) const noexcept {
            if (value != o.value) return value < o.value;
            if (array != o.array) return array < o.array;
            return index < o.index;
        }
    };
    struct Candidate {
        Key key;
        std::size_t weight;
    };

    const std::size_t t = lengths.size();
    std::vector<std::size_t> lo(t, 0);
    std::vector<std::size_t> hi(lengths.begin(), lengths.end());
    std::vector<Candidate> medians;
    medians.reserve(t);

    bool found = false;
    Key best{};
    Counters& c = counters();
    for (;;) {
        medians.clear();
        std::size_t total = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (lo[i] >= hi[i])
                continue;
            const std::size_t mid = lo[i] + (hi[i] - lo[i] - 1) / 2;
            medians.push_back({{value_at(i, mid), i, mid}, hi[i] - lo[i]});
            total += hi[i] - lo[i];
        }
        if (medians.empty())
            break;

        std::sort(medians.begin(), medians.end(), [&c](const Candidate& a, const Candidate& b) {
            ++c.comparisons;
            return a.key < b.key;
        });
        std::size_t acc = 0;
        Key pivot = medians.back().key;
        for (const Candidate& m : medians) {
            acc += m.weight;
            if (2 * acc >= total) {
                pivot = m.key;
                break;
            }
        }

        ++c.predicate_calls;
        const bool holds = pred(pivot.value);
        if (holds) {
            found = true;
            best = pivot;
        }
        for (std::size_t i = 0; i < t; ++i) {
            if (lo[i] >= hi[i])
                continue;
            const std::size_t cut = detail::partition_point_counted(lo[i], hi[i], [&](std::size_t j) {
                const Key k{value_at(i, j), i, j};
                return holds ? k < pivot : !(pivot < k);
            });
            if (holds)
                hi[i] = cut;
            else
                lo[i] = cut;
        }
    }
    if (!found)
        throw Error(Errc::NotFound, "predicate is false on every element");
    return best.value;
}

/// Convenience overload for materialised arrays.
template <class Pred>
double multi_array_search(std::span<const std::vector<double>> arrays, Pred pred) {
    std::vector<std::size_t> lengths;
    lengths.reserve(arrays.size());
    for (const auto& a : arrays)
        lengths.push_back(a.size());
    return multi_array_search(
        std::span<const std::size_t>(lengths),
        [&](std::size_t i, std::size_t j) { return arrays[i][j]; }, pred);
}

} // namespace pkc
