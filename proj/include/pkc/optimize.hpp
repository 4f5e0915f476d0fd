#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pkc/decision.hpp"
#include "pkc/geometry.hpp"
#include "pkc/grouped_skyline.hpp"

namespace pkc {

enum class Algorithm { MatrixSelect, Parametric, SmallK };

const char* to_string(Algorithm a) noexcept;

struct SolveResult {
    double lambda_star_sq = 0.0;
    std::vector<Point> centers;
    Algorithm algorithm = Algorithm::MatrixSelect;

    double lambda_star() const noexcept { return std::sqrt(lambda_star_sq); }
};

/// The implicit h x h matrix with entry (i, j) = +d(S[i], S[j])^2 for i < j
/// and -d(S[i], S[j])^2 otherwise. Rows are nondecreasing, columns
/// nonincreasing. Entries are squared, signed distances, which sort exactly
/// like the signed distances themselves.
///
/// Holds a view of the skyline, which must outlive the matrix.
class SortedDistanceMatrix {
public:
    explicit SortedDistanceMatrix(const SkylineArray& sky) noexcept : sky_(sky.points()) {}

    std::size_t dimension() const noexcept { return sky_.size(); }

    double entry(std::size_t i, std::size_t j) const noexcept {
        ++counters().matrix_touches;
        const double d = dist_sq(sky_[i], sky_[j]);
        return i < j ? d : -d;
    }

private:
    std::span<const Point> sky_;
};

/// rank-th smallest entry (1-based) of the matrix, as a signed squared
/// distance. Evaluates O(h) entries by repeatedly quartering a family of
/// equal-size submatrices and pruning it against its corner elements.
/// Throws Error(RankOutOfRange).
double matrix_select(const SortedDistanceMatrix& m, std::uint64_t rank);

/// Binary search over ranks with matrix_select and decide_materialized.
SolveResult solve_via_matrix(const SkylineArray& sky, std::size_t k);
SolveResult solve_via_matrix(const PointSet& pts, std::size_t k);

/// Must be a pure, monotone function of lambda^2: true iff opt(P, k)^2 <= lambda_sq.
using Decider = std::function<bool(double lambda_sq)>;

/// Next relevant point of p for the unknown optimum lambda*, located by
/// searching the per-group distance lists with the decider as comparator.
/// Throws Error(InternalInvariantViolation) if the decider rejects the upper
/// boundary.
Point param_next_relevant(const GroupedSkyline& groups, const Point& p, const Decider& decider);

/// kappa = min(n, max(1, ceil(k^3 log2(n)^2))).
std::size_t parametric_kappa(std::size_t n, std::size_t k) noexcept;

/// Parametric search with an explicit group size and no crossover.
SolveResult parametric_search(const PointSet& pts, std::size_t k, std::size_t kappa);

/// Delegates to solve_via_matrix when k^4 >= n, otherwise runs
/// parametric_search with parametric_kappa(n, k).
SolveResult solve_parametric(const PointSet& pts, std::size_t k);

} // namespace pkc
