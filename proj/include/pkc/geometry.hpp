#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "pkc/counters.hpp"

namespace pkc {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// p dominates q when it is weakly larger in both coordinates; every point
/// dominates itself.
constexpr bool dominates(const Point& p, const Point& q) noexcept {
    return p.x >= q.x && p.y >= q.y;
}

/// Orders by y, then x. The maximum is "the highest point, ties broken in
/// favour of larger x".
constexpr std::strong_ordering cmp_perturbed_high(const Point& p, const Point& q) noexcept {
    if (p.y < q.y) return std::strong_ordering::less;
    if (p.y > q.y) return std::strong_ordering::greater;
    if (p.x < q.x) return std::strong_ordering::less;
    if (p.x > q.x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Orders by x, then y. The maximum is "the rightmost point, ties broken in
/// favour of larger y".
constexpr std::strong_ordering cmp_perturbed_right(const Point& p, const Point& q) noexcept {
    if (p.x < q.x) return std::strong_ordering::less;
    if (p.x > q.x) return std::strong_ordering::greater;
    if (p.y < q.y) return std::strong_ordering::less;
    if (p.y > q.y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline Point higher_of(const Point& a, const Point& b) noexcept {
    ++counters().comparisons;
    return cmp_perturbed_high(a, b) < 0 ? b : a;
}

inline Point righter_of(const Point& a, const Point& b) noexcept {
    ++counters().comparisons;
    return cmp_perturbed_right(a, b) < 0 ? b : a;
}

/// Squared Euclidean distance. Every distance comparison in the library goes
/// through this function so all code paths see bitwise-identical values.
inline double dist_sq(const Point& p, const Point& q) noexcept {
    ++counters().distance_evals;
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// The curve made of the upward ray from center + (r, 0), the clockwise
/// quarter circle of radius r down to center + (0, -r), and the downward ray
/// from there. Stored with the squared radius.
struct AlphaCurve {
    Point center;
    double radius_sq = 0.0;

    static AlphaCurve with_radius(Point center, double radius);
};

enum class AlphaSide { Left, RightOrBeyond };

/// Closed test: points on the curve are Left.
AlphaSide side_of_alpha(const Point& q, const AlphaCurve& a) noexcept;

/// A deduplicated set of finite points, kept in input order.
class PointSet {
public:
    PointSet() = default;
    /// Throws Error(InvalidArgument) on non-finite coordinates. Negative zero
    /// is normalised so that (0,0) and (-0,0) count as the same point.
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    std::span<const Point> points() const noexcept { return points_; }
    const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

private:
    std::vector<Point> points_;
};

/// A skyline stored for binary searches: x strictly increasing, y strictly
/// decreasing.
class SkylineArray {
public:
    SkylineArray() = default;
    /// Throws Error(InvalidArgument) if the staircase invariant is violated.
    explicit SkylineArray(std::vector<Point> points);

    std::size_t size() const noexcept { return pts_.size(); }
    bool empty() const noexcept { return pts_.empty(); }
    std::span<const Point> points() const noexcept { return pts_; }
    const Point& operator[](std::size_t i) const noexcept { return pts_[i]; }
    const Point& front() const noexcept { return pts_.front(); }
    const Point& back() const noexcept { return pts_.back(); }
    auto begin() const noexcept { return pts_.begin(); }
    auto end() const noexcept { return pts_.end(); }

    friend bool operator==(const SkylineArray&, const SkylineArray&) = default;

private:
    std::vector<Point> pts_;
};

bool is_staircase(std::span<const Point> pts) noexcept;

/// Highest point (ties: larger x) and rightmost point (ties: larger y) of a
/// non-empty range: the two extreme points of its skyline.
Point highest_point(std::span<const Point> pts) noexcept;
Point rightmost_point(std::span<const Point> pts) noexcept;

} // namespace pkc
