#pragma once

#include <cstddef>
#include <vector>

#include "pkc/geometry.hpp"
#include "pkc/grouped_skyline.hpp"

namespace pkc {

/// One greedy cluster: `center` covers the skyline from `left` to `right`.
struct Cluster {
    Point left;
    Point center;
    Point right;

    friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Result of a decision query: either feasible, with centers sorted by x, or
/// incomplete (the radius is below the optimum).
struct DecisionOutcome {
    bool feasible = false;
    std::vector<Point> centers;
    std::vector<Cluster> clusters;

    explicit operator bool() const noexcept { return feasible; }

    /// Exact covering radius (squared) of the returned centers: each skyline
    /// point is nearest to the center of its own cluster, and the farthest
    /// point of a cluster is one of its two ends.
    double covering_radius_sq() const noexcept;
};

/// Greedy decision over an explicit skyline: a single forward scan, O(h).
DecisionOutcome decide_materialized(const SkylineArray& sky, std::size_t k, double lambda_sq);

/// The same greedy run against a grouped skyline, O(k (n/kappa) log kappa).
/// For lambda below lambda_max the centers match decide_materialized exactly;
/// at or above it the answer is the single center p0.
DecisionOutcome decide_grouped(const GroupedSkyline& groups, std::size_t k, double lambda_sq);

} // namespace pkc
