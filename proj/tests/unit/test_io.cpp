#include <doctest.h>

#include <bit>
#include <cstdint>
#include <sstream>

#include "pkc/error.hpp"
#include "pkc/generate.hpp"
#include "pkc/io.hpp"
#include "pkc/report.hpp"
#include "pkc/skyline.hpp"
#include "pkc/svg.hpp"

using namespace pkc;

TEST_CASE("point file parsing") {
    std::istringstream in("# header\n0 0\n\n  1.5\t-2e3  # trailing\n");
    const auto pts = read_points(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == Point{1.5, -2000});

    std::istringstream bad("0 0\n1 x\n");
    try {
        read_points(bad);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    std::istringstream three("1 2 3\n");
    CHECK_THROWS_AS(read_points(three), Error);
    std::istringstream one("1\n");
    CHECK_THROWS_AS(read_points(one), Error);
}

TEST_CASE("generate, write, read is bit exact") {
    for (Generator g : {Generator::UniformSquare, Generator::Clustered, Generator::Staircase,
                        Generator::CircleQuadrant}) {
        const auto pts = generate({g, 500, 99, {}});
        std::stringstream buf;
        write_points(buf, pts);
        const auto back = read_points(buf);
        REQUIRE(back.size() == pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(std::bit_cast<std::uint64_t>(back[i].x) == std::bit_cast<std::uint64_t>(pts[i].x));
            CHECK(std::bit_cast<std::uint64_t>(back[i].y) == std::bit_cast<std::uint64_t>(pts[i].y));
        }
    }
}

TEST_CASE("generators are deterministic") {
    for (Generator g : {Generator::UniformSquare, Generator::Clustered, Generator::Staircase,
                        Generator::CircleQuadrant}) {
        CHECK(generate({g, 300, 5, {}}) == generate({g, 300, 5, {}}));
        CHECK(generate({g, 300, 5, {}}) != generate({g, 300, 6, {}}));
        CHECK(parse_generator(to_string(g)) == g);
    }
    CHECK_FALSE(parse_generator("nope").has_value());
}

TEST_CASE("generator shapes") {
    const PointSet circle(generate({Generator::CircleQuadrant, 400, 1, {}}));
    CHECK(skyline_optimal(circle).size() == circle.size());
    const PointSet stair(generate({Generator::Staircase, 4000, 1, {64}}));
    CHECK(skyline_optimal(stair).size() == 64);
}

TEST_CASE("digest depends on centers and radius only") {
    const std::vector<Point> a{{1, 2}, {3, 0}};
    const std::vector<Point> b{{3, 0}, {1, 2}};
    CHECK(result_digest(a, 2) == result_digest(b, 2));
    CHECK(result_digest(a, 2) != result_digest(a, 2.0000001));
    CHECK(result_digest(a, 2) != result_digest({a.data(), 1}, 2));
}

TEST_CASE("svg structure") {
    const PointSet p({{0, 3}, {1, 2}, {2, 1}, {3, 0}, {0, 0}});
    const SkylineArray sky = slow_skyline(p);
    const std::vector<Point> centers{{1, 2}, {3, 0}};
    const std::string svg = render_svg(p.points(), sky, centers, 1.5);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    std::size_t disks = 0;
    for (std::size_t at = svg.find("class=\"disk\""); at != std::string::npos;
         at = svg.find("class=\"disk\"", at + 1))
        ++disks;
    CHECK(disks == 2);
    CHECK(svg == render_svg(p.points(), sky, centers, 1.5));

    const std::vector<Point> all(sky.begin(), sky.end());
    const std::string zero = render_svg(p.points(), sky, all, 0);
    std::size_t markers = 0;
    for (std::size_t at = zero.find("r=\"0.000\""); at != std::string::npos;
         at = zero.find("r=\"0.000\"", at + 1))
        ++markers;
    CHECK(markers == sky.size());
}
