#include "pkc/grouped_skyline.hpp"

#include <algorithm>
#include <cmath>

#include "pkc/detail/search.hpp"
#include "pkc/error.hpp"
#include "pkc/skyline.hpp"

namespace pkc {

using detail::partition_point_counted;

GroupedSkyline GroupedSkyline::build(const PointSet& pts, std::size_t kappa) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "grouped skyline of an empty point set");
    const Point p0 = highest_point(pts.points());
    const Point q0 = rightmost_point(pts.points());
    const double lambda_max = 1.0 + std::sqrt(dist_sq(p0, q0));
    double bound = 0.0;
    for (const Point& p : pts)
        bound = std::max({bound, std::abs(p.x), std::abs(p.y)});
    return build_with_sentinel(pts.points(), kappa, 2.0 * lambda_max + bound);
}

GroupedSkyline GroupedSkyline::build_with_sentinel(std::span<const Point> pts, std::size_t kappa,
                                                   double sentinel) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "grouped skyline of an empty point set");
    if (kappa == 0)
        throw Error(Errc::InvalidArgument, "group size must be positive");
    kappa = std::min(kappa, pts.size());

    GroupedSkyline g;
    g.kappa_ = kappa;
    g.n_ = pts.size();
    g.sentinel_ = sentinel;
    g.p0_ = highest_point(pts);
    g.q0_ = rightmost_point(pts);
    g.lambda_max_ = 1.0 + std::sqrt(dist_sq(g.p0_, g.q0_));

    const std::size_t t = (pts.size() + kappa - 1) / kappa;
    g.offsets_.reserve(t + 1);
    g.offsets_.push_back(0);
    std::vector<Point> chunk;
    for (std::size_t start = 0; start < pts.size(); start += kappa) {
        const std::size_t stop = std::min(pts.size(), start + kappa);
        chunk.assign(pts.begin() + start, pts.begin() + stop);
        chunk.push_back(g.left_dummy());
        chunk.push_back(g.right_dummy());
        const auto sky = detail::skyline_of(std::move(chunk));
        g.storage_.insert(g.storage_.end(), sky.begin(), sky.end());
        g.offsets_.push_back(g.storage_.size());
        chunk.clear();
    }
    return g;
}

Point GroupedSkyline::next_on_skyline(double x0) const {
    if (!(x0 < sentinel_))
        throw Error(Errc::InvalidArgument, "no skyline point to the right of the query");
    Point best = left_dummy();
    bool first = true;
    for (std::size_t i = 0; i < group_count(); ++i) {
        const auto s = group(i);
        // s[0] is the left sentinel and s.back() the right one, so only the
        // interior has to be searched.
        const std::size_t lo = x0 < s[0].x ? 0 : 1;
        const std::size_t idx =
            partition_point_counted(lo, s.size() - 1, [&](std::size_t j) { return s[j].x <= x0; });
        best = first ? s[idx] : higher_of(best, s[idx]);
        first = false;
    }
    return best;
}

Membership GroupedSkyline::test_membership_and_prev(const Point& p) const {
    if (p.x <= -sentinel_)
        return {p == left_dummy(), left_dummy()};

    // Highest point in x >= x(p): p is on the skyline iff it is that point.
    Point top = right_dummy();
    bool first = true;
    for (std::size_t i = 0; i < group_count(); ++i) {
        const auto s = group(i);
        const std::size_t idx =
            partition_point_counted(1, s.size() - 1, [&](std::size_t j) { return s[j].x < p.x; });
        top = first ? s[idx] : higher_of(top, s[idx]);
        first = false;
    }

    // Rightmost point strictly above y(top), found with y as the search key.
    Point prev = left_dummy();
    first = true;
    for (std::size_t i = 0; i < group_count(); ++i) {
        const auto s = group(i);
        const std::size_t idx =
            partition_point_counted(1, s.size() - 1, [&](std::size_t j) { return s[j].y > top.y; });
        prev = first ? s[idx - 1] : righter_of(prev, s[idx - 1]);
        first = false;
    }
    return {p == top, prev};
}

Point GroupedSkyline::next_relevant_point(const Point& p, double lambda_sq) const {
    if (!(lambda_sq >= 0.0))
        throw Error(Errc::InvalidArgument, "lambda must be non-negative");
    if (p == q0_)
        return p;
    // Beyond lambda_max the whole suffix is covered; this also keeps the
    // right sentinel strictly right of the curve.
    if (lambda_sq >= lambda_max_sq())
        return q0_;

    const AlphaCurve alpha{p, lambda_sq};
    Point last_left = left_dummy();
    Point first_right = right_dummy();
    for (std::size_t i = 0; i < group_count(); ++i) {
        const auto s = group(i);
        const std::size_t idx = partition_point_counted(1, s.size() - 1, [&](std::size_t j) {
            return side_of_alpha(s[j], alpha) == AlphaSide::Left;
        });
        // s[idx - 1] is the last point left of or on the curve; s[idx] is its
        // successor in the group array.
        if (i == 0) {
            last_left = s[idx - 1];
            first_right = s[idx];
        } else {
            last_left = righter_of(last_left, s[idx - 1]);
            first_right = higher_of(first_right, s[idx]);
        }
    }
    const Membership m = test_membership_and_prev(first_right);
    return m.on_skyline ? m.prev : last_left;
}

} // namespace pkc
