#include "pkc/decision.hpp"

#include <algorithm>

#include "pkc/error.hpp"

namespace pkc {

namespace {

void check_arguments(std::size_t k, double lambda_sq) {
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");
    if (!(lambda_sq >= 0.0))
        throw Error(Errc::InvalidArgument, "lambda must be non-negative");
}

} // namespace

double DecisionOutcome::covering_radius_sq() const noexcept {
    double r = 0.0;
    for (const Cluster& c : clusters)
        r = std::max({r, dist_sq(c.center, c.left), dist_sq(c.center, c.right)});
    return r;
}

DecisionOutcome decide_materialized(const SkylineArray& sky, std::size_t k, double lambda_sq) {
    check_arguments(k, lambda_sq);
    ++counters().decisions;
    DecisionOutcome out;
    const std::size_t h = sky.size();
    if (h == 0) {
        out.feasible = true;
        return out;
    }
    std::size_t i = 0;
    for (std::size_t a = 0; a < k; ++a) {
        const std::size_t left = i;
        while (i < h && dist_sq(sky[left], sky[i]) <= lambda_sq)
            ++i;
        const std::size_t center = i - 1;
        while (i < h && dist_sq(sky[center], sky[i]) <= lambda_sq)
            ++i;
        const std::size_t right = i - 1;
        out.centers.push_back(sky[center]);
        out.clusters.push_back({sky[left], sky[center], sky[right]});
        if (i == h) {
            out.feasible = true;
            return out;
        }
    }
    return DecisionOutcome{};
}

DecisionOutcome decide_grouped(const GroupedSkyline& groups, std::size_t k, double lambda_sq) {
    check_arguments(k, lambda_sq);
    ++counters().decisions;
    DecisionOutcome out;
    if (lambda_sq >= groups.lambda_max_sq()) {
        out.feasible = true;
        out.centers.push_back(groups.highest());
        out.clusters.push_back({groups.highest(), groups.highest(), groups.rightmost()});
        return out;
    }
    Point left = groups.highest();
    for (std::size_t a = 0; a < k; ++a) {
        const Point center = groups.next_relevant_point(left, lambda_sq);
        const Point right = groups.next_relevant_point(center, lambda_sq);
        out.centers.push_back(center);
        out.clusters.push_back({left, center, right});
        left = groups.next_on_skyline(right.x);
        if (left.x == groups.sentinel()) {
            out.feasible = true;
            return out;
        }
    }
    return DecisionOutcome{};
}

} // namespace pkc
