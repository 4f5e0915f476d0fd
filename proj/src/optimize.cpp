#include "pkc/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "pkc/detail/search.hpp"
#include "pkc/error.hpp"
#include "pkc/multi_array_search.hpp"
#include "pkc/skyline.hpp"

namespace pkc {

const char* to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::MatrixSelect: return "matrix";
    case Algorithm::Parametric: return "parametric";
    case Algorithm::SmallK: return "small-k";
    }
    return "unknown";
}

namespace {

// Matrix entries are addressed with the rows flipped, so that both rows and
// columns are nondecreasing: A(r, c) = M(h - 1 - r, c). Positions outside
// the h x h range (after padding to a power of two) read as +infinity.
// Ties are broken by position, which makes the order strict in both axes.
struct Key {
    double value;
    std::size_t row;
    std::size_t col;

    bool operator<(const Key& o) const noexcept {
        if (value != o.value) return value < o.value;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

struct Cell {
    std::size_t row;
    std::size_t col;
    Key min;
    Key max;
};

class FlippedMatrix {
public:
    explicit FlippedMatrix(const SortedDistanceMatrix& m) : m_(m), h_(m.dimension()) {}

    Key at(std::size_t r, std::size_t c) const {
        if (r >= h_ || c >= h_)
            return {std::numeric_limits<double>::infinity(), r, c};
        return {m_.entry(h_ - 1 - r, c), r, c};
    }

private:
    const SortedDistanceMatrix& m_;
    std::size_t h_;
};

} // namespace

double matrix_select(const SortedDistanceMatrix& m, std::uint64_t rank) {
    const std::size_t h = m.dimension();
    if (h == 0 || rank < 1 || rank > static_cast<std::uint64_t>(h) * h)
        throw Error(Errc::RankOutOfRange, "matrix rank out of range");

    const FlippedMatrix a(m);
    Counters& counts = counters();
    const auto less = [&counts](const Key& x, const Key& y) {
        ++counts.comparisons;
        return x < y;
    };

    std::size_t side = std::bit_ceil(h);
    std::vector<Cell> cells{{0, 0, a.at(0, 0), a.at(side - 1, side - 1)}};
    std::vector<Cell> next;
    std::vector<Key> keys;
    // rank of the target among the entries (padding included) still covered
    // by `cells`
    std::uint64_t r = rank;

    while (side > 1) {
        side /= 2;
        next.clear();
        for (const Cell& cell : cells) {
            for (std::size_t dr = 0; dr < 2; ++dr) {
                for (std::size_t dc = 0; dc < 2; ++dc) {
                    const std::size_t row = cell.row + dr * side;
                    const std::size_t col = cell.col + dc * side;
                    // Cells made only of padding lie above the target.
                    if (row >= h || col >= h)
                        continue;
                    next.push_back({row, col, a.at(row, col), a.at(row + side - 1, col + side - 1)});
                }
            }
        }
        cells.swap(next);
        const std::uint64_t area = static_cast<std::uint64_t>(side) * side;

        // The J cells with the smallest maxima hold >= r entries, so the
        // target is at most the J-th smallest maximum.
        {
            const std::size_t j = static_cast<std::size_t>((r + area - 1) / area);
            keys.clear();
            for (const Cell& cell : cells)
                keys.push_back(cell.max);
            std::nth_element(keys.begin(), keys.begin() + (j - 1), keys.end(), less);
            const Key upper = keys[j - 1];
            std::erase_if(cells, [&](const Cell& cell) { return less(upper, cell.min); });
        }
        // Symmetrically, the target is at least the J-th largest minimum.
        {
            const std::uint64_t covered = cells.size() * area;
            const std::uint64_t from_top = covered - r + 1;
            const std::size_t j = static_cast<std::size_t>((from_top + area - 1) / area);
            keys.clear();
            for (const Cell& cell : cells)
                keys.push_back(cell.min);
            const std::size_t pos = keys.size() - j;
            std::nth_element(keys.begin(), keys.begin() + pos, keys.end(), less);
            const Key lower = keys[pos];
            const std::size_t before = cells.size();
            std::erase_if(cells, [&](const Cell& cell) { return less(cell.max, lower); });
            r -= (before - cells.size()) * area;
        }
    }

    keys.clear();
    for (const Cell& cell : cells)
        keys.push_back(cell.min);
    if (r < 1 || r > keys.size())
        throw Error(Errc::InternalInvariantViolation, "matrix selection lost its target");
    std::nth_element(keys.begin(), keys.begin() + (r - 1), keys.end(), less);
    return keys[r - 1].value;
}

SolveResult solve_via_matrix(const SkylineArray& sky, std::size_t k) {
    if (sky.empty())
        throw Error(Errc::EmptyInput, "empty skyline");
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");

    const SortedDistanceMatrix m(sky);
    const std::uint64_t h = sky.size();
    const auto feasible = [&](std::uint64_t rank) {
        const double v = matrix_select(m, rank);
        return v >= 0.0 && decide_materialized(sky, k, v).feasible;
    };
    // The largest entry, d(S[0], S[h-1])^2, is always feasible.
    std::uint64_t lo = 1;
    std::uint64_t hi = h * h;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    // + 0.0 turns the diagonal's -0.0 into +0.0.
    const double lambda_sq = matrix_select(m, lo) + 0.0;
    DecisionOutcome out = decide_materialized(sky, k, lambda_sq);
    if (!out.feasible)
        throw Error(Errc::InternalInvariantViolation, "optimal radius failed its own decision");
    return {lambda_sq, std::move(out.centers), Algorithm::MatrixSelect};
}

SolveResult solve_via_matrix(const PointSet& pts, std::size_t k) {
    return solve_via_matrix(skyline_optimal(pts), k);
}

Point param_next_relevant(const GroupedSkyline& groups, const Point& p, const Decider& decider) {
    const std::size_t t = groups.group_count();
    std::vector<std::size_t> first(t);
    std::vector<std::size_t> lengths(t);
    Point last = groups.right_dummy();
    for (std::size_t i = 0; i < t; ++i) {
        const auto s = groups.group(i);
        first[i] = detail::partition_point_counted(1, s.size() - 1,
                                                   [&](std::size_t j) { return s[j].x < p.x; });
        lengths[i] = s.size() - first[i];
        last = i == 0 ? s.back() : righter_of(last, s.back());
    }

    if (decider(0.0))
        return p;
    if (!decider(dist_sq(p, last)))
        throw Error(Errc::InternalInvariantViolation,
                    "decider rejects the largest distance from a skyline point");

    // Distances from p along each group suffix are nondecreasing because p
    // lies on the skyline.
    const double lambda_sq = multi_array_search(
        std::span<const std::size_t>(lengths),
        [&](std::size_t i, std::size_t j) { return dist_sq(p, groups.group(i)[first[i] + j]); },
        decider);
    // lambda_sq is the smallest candidate >= lambda*. If lambda* is strictly
    // smaller, the points at distance exactly lambda_sq are not covered, so
    // search just below it instead. Since lambda* is itself a double, one ulp
    // is enough to tell the two cases apart.
    const double below = std::nextafter(lambda_sq, 0.0);
    return groups.next_relevant_point(p, decider(below) ? below : lambda_sq);
}

std::size_t parametric_kappa(std::size_t n, std::size_t k) noexcept {
    if (n <= 1)
        return 1;
    const double lg = std::log2(static_cast<double>(n));
    const double kd = static_cast<double>(k);
    const double kappa = std::ceil(kd * kd * kd * lg * lg);
    if (!(kappa < static_cast<double>(n)))
        return n;
    return std::max<std::size_t>(1, static_cast<std::size_t>(kappa));
}

SolveResult parametric_search(const PointSet& pts, std::size_t k, std::size_t kappa) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");

    const auto groups = GroupedSkyline::build(pts, kappa);
    const Decider decider = [&groups, k](double lambda_sq) {
        return decide_grouped(groups, k, lambda_sq).feasible;
    };

    SolveResult result;
    result.algorithm = Algorithm::Parametric;
    Point left = groups.highest();
    for (std::size_t a = 0; a < k; ++a) {
        const Point center = param_next_relevant(groups, left, decider);
        const Point right = param_next_relevant(groups, center, decider);
        result.centers.push_back(center);
        result.lambda_star_sq =
            std::max({result.lambda_star_sq, dist_sq(center, left), dist_sq(center, right)});
        left = groups.next_on_skyline(right.x);
        if (left.x == groups.sentinel())
            return result;
    }
    throw Error(Errc::InternalInvariantViolation, "parametric greedy did not cover the skyline");
}

SolveResult solve_parametric(const PointSet& pts, std::size_t k) {
    if (pts.empty())
        throw Error(Errc::EmptyInput, "empty point set");
    if (k == 0)
        throw Error(Errc::InvalidArgument, "k must be positive");
    const std::size_t n = pts.size();
    // k >= n^(1/4), compared as k^4 >= n.
    const bool large_k =
        k >= (std::size_t{1} << 16) || k * k * k * k >= n;
    if (large_k)
        return solve_via_matrix(pts, k);
    return parametric_search(pts, k, parametric_kappa(n, k));
}

} // namespace pkc
