#include "pkc/small_k.hpp"

#include <algorithm>
#include <cmath>

#include "pkc/decision.hpp"
#include "pkc/error.hpp"
#include "pkc/grouped_skyline.hpp"
#include "pkc/skyline.hpp"

namespace pkc {

BisectorExtremes bisector_extremes(std::span<const Point> pts, const Point& p0, const Point& q0) {
    if (!(p0.x < q0.x))
        throw Error(Errc::DegenerateSpan, "bisector extremes need x(p0) < x(q0)");

    const auto in_strip = [&](const Point& p) { return p0.x <= p.x && p.x <= q0.x; };

    // p1: rightmost point left of or on the bisector (ties: larger y).
    // q1: highest point right of it (ties: larger x).
    Point p1 = p0;
    Point q1 = q0;
    for (const Point& p : pts) {
        if (!in_strip(p) || p == p0 || p == q0)
            continue;
        if (dist_sq(p, p0) <= dist_sq(p, q0))
            p1 = righter_of(p1, p);
        else
            q1 = higher_of(q1, p);
    }

    bool q1_on_skyline = true;
    for (const Point& p : pts) {
        if (in_strip(p) && p != q1 && dominates(p, q1)) {
            q1_on_skyline = false;
            break;
        }
    }

    Point left = p0;
    Point right = q0;
    if (q1_on_skyline) {
        // q1 is the first skyline point right of the bisector; its skyline
        // predecessor is the rightmost point strictly above and left of it.
        right = q1;
        for (const Point& p : pts)
            if (in_strip(p) && p.x < q1.x && p.y > q1.y)
                left = righter_of(left, p);
    } else {
        // Then p1 is the last skyline point left of the bisector, and the
        // next skyline point is the highest one strictly right of it.
        left = p1;
        bool have = false;
        for (const Point& p : pts) {
            if (in_strip(p) && p.x > p1.x) {
                right = have ? higher_of(right, p) : p;
                have = true;
            }
        }
    }

    const double lp = dist_sq(left, p0);
    const double lq = dist_sq(left, q0);
    const double rp = dist_sq(right, p0);
    const double rq = dist_sq(right, q0);
    const double left_max = std::max(lp, lq);
    const double right_max = std::max(rp, rq);
    const double left_min = std::min(lp, lq);
    const double right_min = std::min(rp, rq);

    BisectorExtremes out;
    if (right_max < left_max) {
        out.r_star = right;
        out.r_star_cost_sq = right_max;
    } else {
        out.r_star = left;
        out.r_star_cost_sq = left_max;
    }
    if (right_min > left_min) {
        out.r_prime_star = right;
        out.r_prime_value_sq = right_min;
    } else {
        out.r_prime_star = left;
        out.r_prime_value_sq = left_min;
    }
    return out;
}

SolveResult solve_one_center(const PointSet& pts) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    const Point p0 = highest_point(pts.points());
    const Point q0 = rightmost_point(pts.points());
    if (p0 == q0)
        return {0.0, {p0}, Algorithm::SmallK};
    const BisectorExtremes e = bisector_extremes(pts.points(), p0, q0);
    return {e.r_star_cost_sq, {e.r_star}, Algorithm::SmallK};
}

namespace {

void evaluate(Slab& slab) {
    std::vector<Point> strip = slab.members;
    strip.push_back(slab.left_center);
    strip.push_back(slab.right_center);
    const BisectorExtremes e = bisector_extremes(strip, slab.left_center, slab.right_center);
    slab.farthest = e.r_prime_star;
    slab.farthest_sq = e.r_prime_value_sq;
}

} // namespace

Approximation gonzalez_2approx(const PointSet& pts, std::size_t k, const SlabObserver& observer) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");
    if (k == 1) {
        SolveResult one = solve_one_center(pts);
        return {std::move(one.centers), one.lambda_star_sq};
    }

    const Point p0 = highest_point(pts.points());
    const Point q0 = rightmost_point(pts.points());
    if (p0 == q0)
        return {{p0}, 0.0};

    // Points with x == x(p0) other than p0 are dominated by it and dropped.
    Slab first{p0, q0, {}, p0, 0.0};
    for (const Point& p : pts)
        if (p0.x < p.x && p.x <= q0.x && p != q0)
            first.members.push_back(p);
    evaluate(first);

    std::vector<Slab> slabs;
    slabs.push_back(std::move(first));
    Approximation out{{p0, q0}, 0.0};
    if (observer)
        observer(slabs);

    while (out.centers.size() < k) {
        auto widest = std::max_element(slabs.begin(), slabs.end(), [](const Slab& a, const Slab& b) {
            return a.farthest_sq < b.farthest_sq;
        });
        if (widest->farthest_sq == 0.0)
            break;  // every skyline point is already a center

        const Point c = widest->farthest;
        Slab left{widest->left_center, c, {}, c, 0.0};
        Slab right{c, widest->right_center, {}, c, 0.0};
        for (const Point& p : widest->members) {
            if (p == c)
                continue;
            (p.x <= c.x ? left.members : right.members).push_back(p);
        }
        evaluate(left);
        evaluate(right);
        *widest = std::move(right);
        slabs.insert(widest, std::move(left));
        out.centers.push_back(c);
        if (observer)
            observer(slabs);
    }

    // One extra round: the farthest point overall from the chosen centers.
    for (const Slab& s : slabs)
        out.psi_sq = std::max(out.psi_sq, s.farthest_sq);
    return out;
}

namespace {

// Nearest-center distance over the skyline. Along a staircase the distance
// to a fixed point grows in both directions, so the nearest center is one of
// the two neighbours in x order.
double exact_radius_sq(const SkylineArray& sky, std::vector<Point> centers) {
    std::sort(centers.begin(), centers.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    double worst = 0.0;
    std::size_t c = 0;
    for (const Point& p : sky) {
        while (c + 1 < centers.size() && centers[c + 1].x <= p.x)
            ++c;
        double d = dist_sq(p, centers[c]);
        if (c + 1 < centers.size())
            d = std::min(d, dist_sq(p, centers[c + 1]));
        worst = std::max(worst, d);
    }
    return worst;
}

} // namespace

Approximation approx_solve(const PointSet& pts, std::size_t k, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw Error(Errc::InvalidEpsilon, "epsilon must lie in (0, 1)");
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    Approximation rough = gonzalez_2approx(pts, k);
    if (rough.psi_sq == 0.0)
        return rough;

    // lambda <= opt <= 2 lambda
    const double lambda = std::sqrt(rough.psi_sq) / 2.0;
    const double step = eps * lambda / 2.0;
    const auto steps = static_cast<std::size_t>(std::ceil(2.0 / eps));
    const auto grid_sq = [&](std::size_t j) {
        const double v = lambda + static_cast<double>(j) * step;
        return v * v;
    };

    const double lg = std::log2(1.0 / eps);
    const double kd = static_cast<double>(k);
    const double kappa_real = std::ceil(kd * kd * lg * lg);
    const std::size_t kappa = kappa_real >= static_cast<double>(pts.size())
                                  ? pts.size()
                                  : std::max<std::size_t>(1, static_cast<std::size_t>(kappa_real));
    const auto groups = GroupedSkyline::build(pts, kappa);

    // The last grid value is >= 2 lambda >= opt, so it is taken as feasible
    // without asking.
    std::size_t lo = 0;
    std::size_t hi = steps;
    DecisionOutcome best;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        DecisionOutcome o = decide_grouped(groups, k, grid_sq(mid));
        if (o.feasible) {
            hi = mid;
            best = std::move(o);
        } else {
            lo = mid + 1;
        }
    }
    if (!best.feasible) {
        best = decide_grouped(groups, k, grid_sq(steps));
        if (!best.feasible)
            return rough;  // only reachable through rounding in the grid
    }
    const double psi_sq = exact_radius_sq(skyline_optimal(pts), best.centers);
    if (rough.psi_sq < psi_sq)
        return rough;
    return {std::move(best.centers), psi_sq};
}

} // namespace pkc
