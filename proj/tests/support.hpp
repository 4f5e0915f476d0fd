#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pkc/generate.hpp"
#include "pkc/geometry.hpp"

namespace pkc::testing {

inline PointSet staircase(std::size_t h) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < h; ++i)
        pts.push_back({double(i), double(h - 1 - i)});
    return PointSet(std::move(pts));
}

/// Random instance drawn from one of the four generators, chosen by `seed`.
inline PointSet random_instance(std::uint64_t seed, std::size_t max_n) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % max_n;
    InstanceSpec spec;
    spec.n = n;
    spec.seed = rng();
    switch (rng() % 4) {
    case 0: spec.generator = Generator::UniformSquare; break;
    case 1: spec.generator = Generator::Clustered; break;
    case 2:
        spec.generator = Generator::Staircase;
        spec.params = {double(1 + rng() % n)};
        break;
    default: spec.generator = Generator::CircleQuadrant; break;
    }
    return PointSet(generate(spec));
}

/// Integer grid points: many ties in x, y and distance.
inline PointSet grid_instance(std::uint64_t seed, std::size_t n, int side) {
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back({double(int(rng() % side)), double(int(rng() % side))});
    return PointSet(std::move(pts));
}

/// Sorted distinct squared distances between skyline points.
template <class Sky>
std::vector<double> candidates(const Sky& sky) {
    std::vector<double> c;
    for (const Point& a : sky)
        for (const Point& b : sky) {
            const double dx = a.x - b.x, dy = a.y - b.y;
            c.push_back(dx * dx + dy * dy);
        }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

} // namespace pkc::testing
