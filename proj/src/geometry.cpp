#include "pkc/geometry.hpp"

#include <cmath>
#include <unordered_set>

#include "pkc/error.hpp"

namespace pkc {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::EmptyInput: return "empty input";
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::RankOutOfRange: return "rank out of range";
    case Errc::NotFound: return "not found";
    case Errc::InternalInvariantViolation: return "internal invariant violation";
    case Errc::DegenerateSpan: return "degenerate span";
    case Errc::InstanceTooLarge: return "instance too large";
    case Errc::InvalidEpsilon: return "invalid epsilon";
    case Errc::ParseError: return "parse error";
    }
    return "unknown error";
}

Counters& counters() noexcept {
    thread_local Counters c;
    return c;
}

void reset_counters() noexcept { counters() = Counters{}; }

AlphaCurve AlphaCurve::with_radius(Point center, double radius) {
    if (!(radius >= 0.0))
        throw Error(Errc::InvalidArgument, "alpha curve radius must be non-negative");
    return AlphaCurve{center, radius * radius};
}

AlphaSide side_of_alpha(const Point& q, const AlphaCurve& a) noexcept {
    const Point& p = a.center;
    if (q.x <= p.x)
        return AlphaSide::Left;
    const double dx = q.x - p.x;
    if (q.y >= p.y)
        return dx * dx <= a.radius_sq ? AlphaSide::Left : AlphaSide::RightOrBeyond;
    const double dy = p.y - q.y;
    if (dy * dy > a.radius_sq)
        return AlphaSide::RightOrBeyond;
    // On the arc: same arithmetic as dist_sq so the test agrees with every
    // direct distance comparison.
    return dist_sq(p, q) <= a.radius_sq ? AlphaSide::Left : AlphaSide::RightOrBeyond;
}

namespace {

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        const std::size_t hx = std::hash<double>{}(p.x);
        const std::size_t hy = std::hash<double>{}(p.y);
        return hx ^ (hy + 0x9e3779b97f4a7c15ULL + (hx << 6) + (hx >> 2));
    }
};

} // namespace

PointSet::PointSet(std::vector<Point> points) {
    std::unordered_set<Point, PointHash> seen;
    seen.reserve(points.size());
    points_.reserve(points.size());
    for (Point p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(Errc::InvalidArgument, "point coordinates must be finite");
        p.x += 0.0;
        p.y += 0.0;
        if (seen.insert(p).second)
            points_.push_back(p);
    }
}

bool is_staircase(std::span<const Point> pts) noexcept {
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1].x < pts[i].x && pts[i - 1].y > pts[i].y))
            return false;
    return true;
}

SkylineArray::SkylineArray(std::vector<Point> points) : pts_(std::move(points)) {
    if (!is_staircase(pts_))
        throw Error(Errc::InvalidArgument,
                    "skyline points must have strictly increasing x and strictly decreasing y");
}

Point highest_point(std::span<const Point> pts) noexcept {
    Point best = pts.front();
    for (const Point& p : pts.subspan(1))
        best = higher_of(best, p);
    return best;
}

Point rightmost_point(std::span<const Point> pts) noexcept {
    Point best = pts.front();
    for (const Point& p : pts.subspan(1))
        best = righter_of(best, p);
    return best;
}

} // namespace pkc
