#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pkc/geometry.hpp"

namespace pkc {

struct Membership {
    bool on_skyline = false;
    Point prev;  // rightmost skyline point strictly left of the query
};

/// A partition of P into contiguous chunks of at most kappa points, each
/// replaced by its own skyline padded with the sentinels (-M, M) and (M, -M).
/// Answers next/prev/membership/next-relevant-point queries on sky(P)
/// without ever materialising it. Immutable once built.
class GroupedSkyline {
public:
    /// Sentinel bound M = 2 * lambda_max + max |coordinate|, where
    /// lambda_max = 1 + d(p0, q0). Requires 1 <= kappa; kappa is clamped to n.
    static GroupedSkyline build(const PointSet& pts, std::size_t kappa);

    /// Same layout with a caller-chosen sentinel bound, which must exceed
    /// every |coordinate|.
    static GroupedSkyline build_with_sentinel(std::span<const Point> pts, std::size_t kappa,
                                              double sentinel);

    std::size_t group_count() const noexcept { return offsets_.size() - 1; }
    std::size_t kappa() const noexcept { return kappa_; }
    std::size_t point_count() const noexcept { return n_; }
    double sentinel() const noexcept { return sentinel_; }
    double lambda_max() const noexcept { return lambda_max_; }
    double lambda_max_sq() const noexcept { return lambda_max_ * lambda_max_; }

    /// Highest point of P (ties: larger x), the first skyline point.
    const Point& highest() const noexcept { return p0_; }
    /// Rightmost point of P (ties: larger y), the last skyline point.
    const Point& rightmost() const noexcept { return q0_; }

    Point left_dummy() const noexcept { return {-sentinel_, sentinel_}; }
    Point right_dummy() const noexcept { return {sentinel_, -sentinel_}; }
    bool is_dummy(const Point& p) const noexcept {
        return p == left_dummy() || p == right_dummy();
    }

    /// Skyline of group i, sentinels included, sorted by x.
    std::span<const Point> group(std::size_t i) const noexcept {
        return {storage_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    /// Leftmost point of the padded skyline strictly right of x0. Returns the
    /// right sentinel once past the real skyline. Requires x0 < M.
    Point next_on_skyline(double x0) const;

    /// Whether p is on the padded skyline, and its predecessor there.
    Membership test_membership_and_prev(const Point& p) const;

    /// Farthest skyline point q with x(q) >= x(p) and d(p, q)^2 <= lambda_sq.
    /// p must be a skyline point; returns p when nothing else qualifies.
    Point next_relevant_point(const Point& p, double lambda_sq) const;

private:
    GroupedSkyline() = default;

    std::vector<Point> storage_;
    std::vector<std::size_t> offsets_;
    std::size_t kappa_ = 0;
    std::size_t n_ = 0;
    double sentinel_ = 0.0;
    double lambda_max_ = 0.0;
    Point p0_;
    Point q0_;
};

} // namespace pkc
