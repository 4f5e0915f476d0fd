#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "../support.hpp"
#include "pkc/counters.hpp"
#include "pkc/decision.hpp"
#include "pkc/error.hpp"
#include "pkc/grouped_skyline.hpp"
#include "pkc/multi_array_search.hpp"
#include "pkc/optimize.hpp"
#include "pkc/oracle.hpp"
#include "pkc/skyline.hpp"

using namespace pkc;
using pkc::testing::random_instance;
using pkc::testing::staircase;

TEST_CASE("oracle examples") {
    CHECK(oracle::brute_opt(staircase(3), 1) == 2);
    CHECK(oracle::brute_opt(staircase(3), 1, oracle::OptMethod::Subsets) == 2);
    CHECK(oracle::brute_opt(staircase(4), 2) == 2);
    CHECK(oracle::brute_opt(staircase(4), 2, oracle::OptMethod::Subsets) == 2);
    CHECK(oracle::brute_opt(staircase(4), 4) == 0);

    const SkylineArray s1({{5, 5}});
    CHECK(oracle::brute_matrix_rank(s1, 1) == 0);
    const SkylineArray s3 = slow_skyline(staircase(3));
    CHECK(oracle::brute_matrix_rank(s3, 9) == 8);
    CHECK(oracle::brute_matrix_rank(s3, 5) == 0);
    CHECK(oracle::brute_matrix_rank(s3, 7) == 2);
}

TEST_CASE("the two oracles agree") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const PointSet p = random_instance(seed + 300, 60);
        const SkylineArray sky = oracle::brute_skyline(p);
        if (sky.size() > 12)
            continue;
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(oracle::brute_opt(p, k) == oracle::brute_opt(p, k, oracle::OptMethod::Subsets));
    }
}

TEST_CASE("sorted matrix layout") {
    const SkylineArray s = slow_skyline(random_instance(5, 200));
    const SortedDistanceMatrix m(s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j + 1 < s.size(); ++j) {
            CHECK(m.entry(i, j) <= m.entry(i, j + 1));
            CHECK(m.entry(j, i) >= m.entry(j + 1, i));
        }
}

TEST_CASE("matrix selection") {
    const SkylineArray s3 = slow_skyline(staircase(3));
    const SortedDistanceMatrix m3(s3);
    CHECK(matrix_select(m3, 7) == 2);
    CHECK(matrix_select(m3, 1) == -8);
    CHECK(matrix_select(m3, 9) == 8);
    CHECK_THROWS_AS(matrix_select(m3, 0), Error);
    CHECK_THROWS_AS(matrix_select(m3, 10), Error);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const SkylineArray s = slow_skyline(random_instance(seed + 40, 80));
        const SortedDistanceMatrix m(s);
        const std::uint64_t h = s.size();
        for (std::uint64_t r = 1; r <= h * h; r += 1 + h / 3) {
            reset_counters();
            CHECK(matrix_select(m, r) == oracle::brute_matrix_rank(s, r));
            CHECK(counters().matrix_touches <= 60 * h);
        }
    }
}

TEST_CASE("multi-array search") {
    const std::vector<std::vector<double>> a{{1, 3, 5}, {2, 4}};
    CHECK(multi_array_search(a, [](double v) { return v >= 3.5; }) == 4);
    const std::vector<std::vector<double>> one{{7}};
    CHECK(multi_array_search(one, [](double v) { return v >= 7; }) == 7);
    CHECK_THROWS_AS(multi_array_search(a, [](double) { return false; }), Error);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::vector<double>> arrays(5);
        std::vector<double> merged;
        for (auto& arr : arrays) {
            arr.resize(rng() % 12);
            for (double& v : arr)
                v = double(rng() % 50);
            std::sort(arr.begin(), arr.end());
            merged.insert(merged.end(), arr.begin(), arr.end());
        }
        if (merged.empty())
            continue;
        std::sort(merged.begin(), merged.end());
        const double threshold = double(rng() % 50);
        const auto pred = [&](double v) { return v >= threshold; };
        const auto it = std::find_if(merged.begin(), merged.end(), pred);
        if (it == merged.end())
            CHECK_THROWS_AS(multi_array_search(arrays, pred), Error);
        else
            CHECK(multi_array_search(arrays, pred) == *it);
    }
}

TEST_CASE("exact solvers on staircase-4") {
    const PointSet s4 = staircase(4);
    const SolveResult m = solve_via_matrix(s4, 2);
    CHECK(m.lambda_star_sq == 2);
    CHECK(oracle::covering_radius_sq(slow_skyline(s4), m.centers) == 2);
    const SolveResult p = solve_parametric(s4, 2);
    CHECK(p.lambda_star_sq == 2);
    CHECK(parametric_search(s4, 2, 1).lambda_star_sq == 2);

    const SolveResult all = solve_via_matrix(s4, 4);
    CHECK(all.lambda_star_sq == 0);
    CHECK(all.centers.size() == 4);
    CHECK(solve_parametric(s4, 7).lambda_star_sq == 0);
    CHECK(parametric_search(s4, 4, 2).lambda_star_sq == 0);
}

TEST_CASE("parametric next relevant point") {
    const PointSet s4 = staircase(4);
    const SkylineArray sky = slow_skyline(s4);
    const GroupedSkyline g = GroupedSkyline::build(s4, 2);
    const Decider one = [&](double l) { return decide_materialized(sky, 1, l).feasible; };
    CHECK(param_next_relevant(g, {0, 3}, one) == Point{2, 1});
    const Decider many = [&](double l) { return decide_materialized(sky, 4, l).feasible; };
    CHECK(param_next_relevant(g, {1, 2}, many) == Point{1, 2});

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PointSet p = random_instance(seed + 600, 250);
        const SkylineArray s = slow_skyline(p);
        const std::size_t k = 1 + seed % 5;
        const double opt = oracle::brute_opt(p, k);
        const GroupedSkyline gs = GroupedSkyline::build(p, 1 + seed % 7);
        const Decider d = [&](double l) { return decide_materialized(s, k, l).feasible; };
        for (std::size_t i = 0; i < s.size(); i += 1 + s.size() / 8)
            CHECK(param_next_relevant(gs, s[i], d) == gs.next_relevant_point(s[i], opt));
    }
}

TEST_CASE("exact solvers agree with the oracle") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const PointSet p = random_instance(seed + 1200, 300);
        const SkylineArray sky = slow_skyline(p);
        const std::size_t k = 1 + seed % 6;
        const double opt = oracle::brute_opt(p, k);
        const SolveResult m = solve_via_matrix(p, k);
        const SolveResult q = parametric_search(p, k, parametric_kappa(p.size(), k));
        CHECK(m.lambda_star_sq == opt);
        CHECK(q.lambda_star_sq == opt);
        CHECK(solve_parametric(p, k).lambda_star_sq == opt);
        CHECK(oracle::covering_radius_sq(sky, m.centers) == opt);
        CHECK(oracle::covering_radius_sq(sky, q.centers) == opt);
    }
}

TEST_CASE("parametric kappa") {
    CHECK(parametric_kappa(1, 1) == 1);
    CHECK(parametric_kappa(1024, 1) == 100);
    CHECK(parametric_kappa(1024, 2) == 800);
    CHECK(parametric_kappa(1024, 3) == 1024);
}
