#include "pkc/oracle.hpp"

#include <algorithm>
#include <vector>

#include "pkc/error.hpp"

namespace pkc::oracle {

SkylineArray brute_skyline(const PointSet& pts) {
    std::vector<Point> out;
    for (const Point& p : pts) {
        bool dominated = false;
        for (const Point& q : pts) {
            if (q != p && dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    return SkylineArray(std::move(out));
}

bool coverable(const SkylineArray& sky, std::size_t k, double lambda_sq) {
    const std::size_t h = sky.size();
    std::size_t first_uncovered = 0;
    std::size_t used = 0;
    while (first_uncovered < h) {
        if (used == k)
            return false;
        // Best center: the rightmost point that still reaches the first
        // uncovered one. Checked against every point, not just a prefix.
        std::size_t center = first_uncovered;
        for (std::size_t j = 0; j < h; ++j)
            if (j > center && dist_sq(sky[first_uncovered], sky[j]) <= lambda_sq)
                center = j;
        std::size_t reach = center;
        for (std::size_t j = 0; j < h; ++j)
            if (j > reach && dist_sq(sky[center], sky[j]) <= lambda_sq)
                reach = j;
        ++used;
        first_uncovered = reach + 1;
    }
    return true;
}

double covering_radius_sq(const SkylineArray& sky, std::span<const Point> centers) {
    double worst = 0.0;
    for (const Point& p : sky) {
        double nearest = -1.0;
        for (const Point& c : centers) {
            const double d = dist_sq(p, c);
            if (nearest < 0.0 || d < nearest)
                nearest = d;
        }
        worst = std::max(worst, nearest);
    }
    return worst;
}

namespace {

double opt_by_candidates(const SkylineArray& sky, std::size_t k) {
    std::vector<double> candidates;
    candidates.reserve(sky.size() * (sky.size() + 1) / 2);
    for (std::size_t i = 0; i < sky.size(); ++i)
        for (std::size_t j = i; j < sky.size(); ++j)
            candidates.push_back(dist_sq(sky[i], sky[j]));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (coverable(sky, k, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

double opt_by_subsets(const SkylineArray& sky, std::size_t k) {
    const std::size_t h = sky.size();
    const std::size_t m = std::min(k, h);
    std::vector<bool> pick(h, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
    double best = -1.0;
    std::vector<Point> chosen;
    do {
        chosen.clear();
        for (std::size_t i = 0; i < h; ++i)
            if (pick[i])
                chosen.push_back(sky[i]);
        const double r = covering_radius_sq(sky, chosen);
        if (best < 0.0 || r < best)
            best = r;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

} // namespace

double brute_opt(const PointSet& pts, std::size_t k, OptMethod method) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");
    const SkylineArray sky = brute_skyline(pts);
    if (k >= sky.size())
        return 0.0;
    switch (method) {
    case OptMethod::Candidates:
        if (sky.size() > 2000)
            throw Error(Errc::InstanceTooLarge, "candidate oracle limited to h <= 2000");
        return opt_by_candidates(sky, k);
    case OptMethod::Subsets:
        if (sky.size() > 20)
            throw Error(Errc::InstanceTooLarge, "subset oracle limited to h <= 20");
        return opt_by_subsets(sky, k);
    }
    return 0.0;
}

double brute_matrix_rank(const SkylineArray& sky, std::uint64_t rank) {
    const std::size_t h = sky.size();
    if (rank < 1 || rank > static_cast<std::uint64_t>(h) * h)
        throw Error(Errc::RankOutOfRange, "matrix rank out of range");
    std::vector<double> all;
    all.reserve(h * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            all.push_back(i < j ? dist_sq(sky[i], sky[j]) : -dist_sq(sky[i], sky[j]));
    std::sort(all.begin(), all.end());
    return all[rank - 1];
}

Point brute_next_relevant(const SkylineArray& sky, const Point& p, double lambda_sq) {
    Point best = p;
    double best_d = 0.0;
    for (const Point& q : sky) {
        if (q.x < p.x)
            continue;
        const double d = dist_sq(p, q);
        if (d <= lambda_sq && d >= best_d) {
            best = q;
            best_d = d;
        }
    }
    return best;
}

} // namespace pkc::oracle
