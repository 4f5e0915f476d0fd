#include <doctest.h>

#include "../support.hpp"
#include "pkc/counters.hpp"
#include "pkc/oracle.hpp"
#include "pkc/skyline.hpp"

using namespace pkc;
using pkc::testing::random_instance;
using pkc::testing::staircase;

namespace {
SkylineArray sky_of(std::vector<Point> pts) { return SkylineArray(std::move(pts)); }
} // namespace

TEST_CASE("slow skyline examples") {
    CHECK(slow_skyline(PointSet({{0, 0}, {1, 1}})) == sky_of({{1, 1}}));
    CHECK(slow_skyline(PointSet({{0, 2}, {1, 1}, {2, 0}})) == sky_of({{0, 2}, {1, 1}, {2, 0}}));
    const PointSet p({{2, 2}, {1, 3}, {3, 1}, {0, 0}});
    CHECK(slow_skyline(p) == sky_of({{1, 3}, {2, 2}, {3, 1}}));
    CHECK(oracle::brute_skyline(p) == slow_skyline(p));
}

TEST_CASE("brute skyline examples") {
    CHECK(oracle::brute_skyline(PointSet({{0, 0}})) == sky_of({{0, 0}}));
    CHECK(oracle::brute_skyline(PointSet({{1, 1}, {1, 2}})) == sky_of({{1, 2}}));
}

TEST_CASE("bounded skyline dichotomy on a staircase") {
    const PointSet s5 = staircase(5);
    const BoundedResult full = skyline_bounded(s5, 5);
    REQUIRE(full.has_value());
    CHECK(full->size() == 5);
    CHECK_FALSE(skyline_bounded(s5, 4).has_value());
}

TEST_CASE("bounded skyline equals the oracle at s = h") {
    const PointSet p = random_instance(11, 100);
    const SkylineArray ref = oracle::brute_skyline(p);
    const BoundedResult got = skyline_bounded(p, ref.size());
    REQUIRE(got.has_value());
    CHECK(*got == ref);
    if (ref.size() > 1)
        CHECK_FALSE(skyline_bounded(p, ref.size() - 1).has_value());
}

TEST_CASE("optimal skyline") {
    CHECK(skyline_optimal(PointSet({{4, 5}})) == sky_of({{4, 5}}));
    CHECK(skyline_optimal(staircase(1000)).size() == 1000);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PointSet p = random_instance(seed, 10000);
        CHECK(skyline_optimal(p) == slow_skyline(p));
    }
}

TEST_CASE("skylines on integer grids with ties") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PointSet p = pkc::testing::grid_instance(seed, 1 + seed % 60, 6);
        const SkylineArray ref = oracle::brute_skyline(p);
        CHECK(slow_skyline(p) == ref);
        CHECK(skyline_optimal(p) == ref);
    }
}

TEST_CASE("optimal skyline is output sensitive") {
    // h fixed, n doubling: comparisons roughly double
    auto count = [](std::size_t n) {
        const PointSet p(generate({Generator::Staircase, n, 5, {32}}));
        reset_counters();
        (void)skyline_optimal(p);
        return double(counters().comparisons);
    };
    const double r = count(1 << 14) / count(1 << 13);
    CHECK(r > 1.6);
    CHECK(r < 2.6);
}
