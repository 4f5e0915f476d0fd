#include "pkc/skyline.hpp"

#include <algorithm>
#include <cmath>

#include "pkc/error.hpp"
#include "pkc/grouped_skyline.hpp"

namespace pkc {

namespace detail {

std::vector<Point> skyline_of(std::vector<Point> pts) {
    if (pts.empty())
        return pts;
    Counters& c = counters();
    std::sort(pts.begin(), pts.end(), [&c](const Point& a, const Point& b) {
        ++c.comparisons;
        return cmp_perturbed_right(a, b) < 0;
    });
    std::vector<Point> out;
    out.push_back(pts.back());
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        ++c.comparisons;
        if (pts[i].y > out.back().y)
            out.push_back(pts[i]);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace detail

SkylineArray slow_skyline(const PointSet& pts) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "skyline of an empty point set");
    return SkylineArray(detail::skyline_of({pts.begin(), pts.end()}));
}

BoundedResult skyline_bounded(const PointSet& pts, std::size_t s) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "skyline of an empty point set");
    if (s == 0)
        throw Error(Errc::InvalidArgument, "skyline size guess must be positive");

    double bound = 0.0;
    for (const Point& p : pts)
        bound = std::max({bound, std::abs(p.x), std::abs(p.y)});
    const double sentinel = 1.0 + bound;

    const auto groups = GroupedSkyline::build_with_sentinel(pts.points(), s, sentinel);

    std::vector<Point> out;
    Point p = groups.left_dummy();
    for (std::size_t round = 0; round <= s; ++round) {
        p = groups.next_on_skyline(p.x);
        if (p.x == sentinel)
            return SkylineArray(std::move(out));
        out.push_back(p);
    }
    return std::nullopt;
}

SkylineArray skyline_optimal(const PointSet& pts) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "skyline of an empty point set");
    for (std::size_t s = 4;; s = s * s) {
        if (auto sky = skyline_bounded(pts, s))
            return std::move(*sky);
        // Once s reaches n the bounded call cannot fail.
        if (s >= pts.size())
            throw Error(Errc::InternalInvariantViolation, "bounded skyline failed with s >= n");
    }
}

} // namespace pkc
