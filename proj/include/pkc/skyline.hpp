#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pkc/geometry.hpp"

namespace pkc {

/// Skyline by lexicographic sort and a reverse scan keeping local maxima.
/// O(n log n). Throws Error(EmptyInput) on an empty set.
SkylineArray slow_skyline(const PointSet& pts);

/// Complete skyline when it has at most `s` points, std::nullopt otherwise.
using BoundedResult = std::optional<SkylineArray>;

/// O(n log s): splits the input into ceil(n/s) chunks, builds per-chunk
/// skylines padded with sentinels, then walks the global skyline for at most
/// s + 1 steps.
BoundedResult skyline_bounded(const PointSet& pts, std::size_t s);

/// O(n log h): retries skyline_bounded with s = 4, 16, 256, ... until it
/// completes.
SkylineArray skyline_optimal(const PointSet& pts);

namespace detail {

// Skyline of an arbitrary (possibly duplicated) range, sorted by x.
std::vector<Point> skyline_of(std::vector<Point> pts);

} // namespace detail

} // namespace pkc
