#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pkc/geometry.hpp"

// Brute-force reference implementations. They share nothing with the main
// algorithms beyond the geometry predicates and are meant for testing only.
namespace pkc::oracle {

/// O(n^2) pairwise dominance.
SkylineArray brute_skyline(const PointSet& pts);

enum class OptMethod {
    Candidates,  // sort all pairwise skyline distances, binary search a coverage check
    Subsets,     // enumerate every k-subset of the skyline
};

/// opt(P, k)^2. Throws Error(InstanceTooLarge) when h exceeds 2000
/// (Candidates) or 20 (Subsets).
double brute_opt(const PointSet& pts, std::size_t k, OptMethod method = OptMethod::Candidates);

/// rank-th smallest entry of the fully materialised signed squared-distance
/// matrix. Throws Error(RankOutOfRange).
double brute_matrix_rank(const SkylineArray& sky, std::uint64_t rank);

/// Covering radius of `centers` over the skyline, squared, by full scan.
double covering_radius_sq(const SkylineArray& sky, std::span<const Point> centers);

/// Next relevant point by linear scan of the skyline.
Point brute_next_relevant(const SkylineArray& sky, const Point& p, double lambda_sq);

/// Whether k disks of squared radius lambda_sq centred at skyline points
/// cover the skyline. O(h^2) per call.
bool coverable(const SkylineArray& sky, std::size_t k, double lambda_sq);

} // namespace pkc::oracle
