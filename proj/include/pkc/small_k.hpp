#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pkc/geometry.hpp"
#include "pkc/optimize.hpp"

namespace pkc {

/// Extremes of the skyline portion between two skyline points p0 and q0,
/// found by splitting the points at the perpendicular bisector of p0q0.
struct BisectorExtremes {
    Point r_star;              // minimises max{d(., p0), d(., q0)}
    double r_star_cost_sq;     // that maximum, squared
    Point r_prime_star;        // maximises min{d(., p0), d(., q0)}
    double r_prime_value_sq;   // that minimum, squared
};

/// Linear time, without materialising the skyline. Points outside the strip
/// x(p0) <= x <= x(q0) are ignored. Both p0 and q0 must be skyline points of
/// `pts` with x(p0) < x(q0); ties between the two candidates go to the one
/// with smaller x. Throws Error(DegenerateSpan) when x(p0) >= x(q0).
BisectorExtremes bisector_extremes(std::span<const Point> pts, const Point& p0, const Point& q0);

/// Exact 1-center in O(n).
SolveResult solve_one_center(const PointSet& pts);

/// Vertical strip between two consecutive centers of the farthest-first
/// traversal.
struct Slab {
    Point left_center;
    Point right_center;
    std::vector<Point> members;  // points with left.x < x <= right.x, centers excluded
    Point farthest;              // skyline point of the strip farthest from both centers
    double farthest_sq = 0.0;    // its distance to the nearer center, squared
};

struct Approximation {
    std::vector<Point> centers;
    double psi_sq = 0.0;  // exact covering radius of `centers`, squared
};

/// Called with the current slabs after the initial split and after every
/// insertion.
using SlabObserver = std::function<void(std::span<const Slab>)>;

/// Farthest-first traversal seeded with the two extreme skyline points, run
/// over slabs in O(kn). psi <= 2 opt.
Approximation gonzalez_2approx(const PointSet& pts, std::size_t k,
                               const SlabObserver& observer = {});

/// (1 + eps)-approximation: a 2-approximation brackets the optimum, then a
/// binary search over a grid of step eps * lambda / 2 runs the grouped
/// decision with kappa = min(n, max(1, ceil(k^2 log2(1/eps)^2))).
/// Throws Error(InvalidEpsilon) unless 0 < eps < 1.
Approximation approx_solve(const PointSet& pts, std::size_t k, double eps);

} // namespace pkc
