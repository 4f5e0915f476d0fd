#include <doctest.h>

#include <algorithm>

#include "../support.hpp"
#include "pkc/counters.hpp"
#include "pkc/error.hpp"
#include "pkc/optimize.hpp"
#include "pkc/oracle.hpp"
#include "pkc/skyline.hpp"
#include "pkc/small_k.hpp"

using namespace pkc;
using pkc::testing::random_instance;
using pkc::testing::staircase;

TEST_CASE("bisector extremes on staircase-4") {
    const PointSet s4 = staircase(4);
    const BisectorExtremes e = bisector_extremes(s4.points(), {0, 3}, {3, 0});
    CHECK(e.r_star == Point{1, 2});
    CHECK(e.r_star_cost_sq == 8);

    const std::vector<Point> ends{{0, 3}, {3, 0}};
    const BisectorExtremes two = bisector_extremes(ends, {0, 3}, {3, 0});
    CHECK(two.r_star == Point{0, 3});
    CHECK(two.r_star_cost_sq == 18);

    CHECK_THROWS_AS(bisector_extremes(ends, {3, 0}, {0, 3}), Error);
}

TEST_CASE("bisector extremes match a scan of the skyline") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const PointSet p = random_instance(seed + 2000, 200);
        const SkylineArray sky = oracle::brute_skyline(p);
        if (sky.size() < 2)
            continue;
        const Point p0 = sky.front(), q0 = sky.back();
        double best = 0, worst = 0;
        Point r, rp;
        bool first = true;
        for (const Point& s : sky) {
            const double a = dist_sq(s, p0), b = dist_sq(s, q0);
            const double hi = std::max(a, b), lo = std::min(a, b);
            if (first || hi < best) {
                best = hi;
                r = s;
            }
            if (first || lo > worst) {
                worst = lo;
                rp = s;
            }
            first = false;
        }
        const BisectorExtremes e = bisector_extremes(p.points(), p0, q0);
        CHECK(e.r_star_cost_sq == best);
        CHECK(e.r_prime_value_sq == worst);
        CHECK(std::max(dist_sq(e.r_star, p0), dist_sq(e.r_star, q0)) == best);
        CHECK(std::min(dist_sq(e.r_prime_star, p0), dist_sq(e.r_prime_star, q0)) == worst);
    }
}

TEST_CASE("one center") {
    const PointSet p({{0, 3}, {1, 2}, {3, 0}, {0, 0}, {1, 1}});
    const SolveResult r = solve_one_center(p);
    CHECK(r.lambda_star_sq == 8);
    CHECK(r.centers == std::vector<Point>{{1, 2}});

    const SolveResult single = solve_one_center(PointSet({{2, 7}}));
    CHECK(single.lambda_star_sq == 0);
    CHECK(single.centers == std::vector<Point>{{2, 7}});

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PointSet q = random_instance(seed + 2500, 1000);
        reset_counters();
        const SolveResult o = solve_one_center(q);
        CHECK(counters().distance_evals <= 3 * q.size());
        CHECK(o.lambda_star_sq == solve_via_matrix(q, 1).lambda_star_sq);
    }
}

TEST_CASE("farthest-first traversal") {
    const PointSet s5 = staircase(5);
    const Approximation a = gonzalez_2approx(s5, 3);
    CHECK(a.psi_sq == 2);
    CHECK(a.centers == std::vector<Point>{{0, 4}, {4, 0}, {2, 2}});

    const Approximation all = gonzalez_2approx(s5, 5);
    CHECK(all.psi_sq == 0);
    CHECK(gonzalez_2approx(s5, 9).psi_sq == 0);

    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const PointSet p = random_instance(seed + 3000, 300);
        const SkylineArray sky = slow_skyline(p);
        const std::size_t k = 1 + seed % 8;
        const Approximation g = gonzalez_2approx(p, k);
        CHECK(g.centers.size() <= k);
        CHECK(g.psi_sq == oracle::covering_radius_sq(sky, g.centers));
        CHECK(g.psi_sq <= 4 * oracle::brute_opt(p, k));
    }
}

TEST_CASE("slab observer sees disjoint strips") {
    const PointSet p = random_instance(77, 500);
    std::size_t rounds = 0;
    gonzalez_2approx(p, 5, [&](std::span<const Slab> slabs) {
        ++rounds;
        for (const Slab& s : slabs) {
            CHECK(s.left_center.x < s.right_center.x);
            for (const Point& m : s.members) {
                CHECK(m.x > s.left_center.x);
                CHECK(m.x <= s.right_center.x);
            }
        }
    });
    CHECK(rounds >= 1);
}

TEST_CASE("approximation scheme") {
    CHECK_THROWS_AS(approx_solve(staircase(4), 2, 0), Error);
    CHECK_THROWS_AS(approx_solve(staircase(4), 2, 1), Error);

    const PointSet s5 = staircase(5);
    const double opt = oracle::brute_opt(s5, 2, oracle::OptMethod::Subsets);
    CHECK(approx_solve(s5, 2, 0.1).psi_sq <= 1.21 * opt);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PointSet p = random_instance(seed + 4000, 300);
        const SkylineArray sky = slow_skyline(p);
        const std::size_t k = 1 + seed % 6;
        const double o = oracle::brute_opt(p, k);
        for (double eps : {0.5, 0.1, 0.01}) {
            const Approximation a = approx_solve(p, k, eps);
            CHECK(a.centers.size() <= k);
            CHECK(a.psi_sq == oracle::covering_radius_sq(sky, a.centers));
            CHECK(a.psi_sq <= (1 + eps) * (1 + eps) * o);
        }
    }
}
