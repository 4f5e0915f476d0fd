#include "pkc/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <random>

#include "pkc/error.hpp"

namespace pkc {

const char* to_string(Generator g) noexcept {
    switch (g) {
    case Generator::UniformSquare: return "uniform-square";
    case Generator::Clustered: return "clustered";
    case Generator::Staircase: return "staircase";
    case Generator::CircleQuadrant: return "circle-quadrant";
    }
    return "unknown";
}

std::optional<Generator> parse_generator(std::string_view name) noexcept {
    for (Generator g : {Generator::UniformSquare, Generator::Clustered, Generator::Staircase,
                        Generator::CircleQuadrant})
        if (name == to_string(g))
            return g;
    return std::nullopt;
}

namespace {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    // uniform in [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1)
    double open_uniform() {
        double u;
        do {
            u = uniform();
        } while (u == 0.0);
        return u;
    }

    std::size_t index(std::size_t bound) {
        return std::min(bound - 1, static_cast<std::size_t>(uniform() * static_cast<double>(bound)));
    }

    double normal() {
        const double u1 = open_uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::mt19937_64 rng_;
};

double param(const InstanceSpec& spec, std::size_t i, double fallback) {
    return i < spec.params.size() ? spec.params[i] : fallback;
}

} // namespace

std::vector<Point> generate(const InstanceSpec& spec) {
    Source src(spec.seed);
    std::vector<Point> pts;
    pts.reserve(spec.n);
    switch (spec.generator) {
    case Generator::UniformSquare: {
        const double side = param(spec, 0, 1.0);
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double x = side * src.uniform();
            pts.push_back({x, side * src.uniform()});
        }
        break;
    }
    case Generator::Clustered: {
        const auto clusters = static_cast<std::size_t>(std::max(1.0, param(spec, 0, 5.0)));
        const double sigma = param(spec, 1, 0.05);
        std::vector<Point> centers;
        for (std::size_t c = 0; c < clusters; ++c) {
            const double x = src.uniform();
            centers.push_back({x, src.uniform()});
        }
        for (std::size_t i = 0; i < spec.n; ++i) {
            const Point& c = centers[src.index(clusters)];
            const double x = c.x + sigma * src.normal();
            pts.push_back({x, c.y + sigma * src.normal()});
        }
        break;
    }
    case Generator::Staircase: {
        const double wanted = param(spec, 0, static_cast<double>(spec.n));
        const std::size_t h = std::min(spec.n, static_cast<std::size_t>(std::max(1.0, wanted)));
        // Front on y = 1 - x^2 with jittered, strictly increasing x.
        std::vector<Point> front;
        for (std::size_t i = 0; i < h; ++i) {
            const double x = (static_cast<double>(i) + 0.5 + 0.8 * (src.uniform() - 0.5)) /
                             static_cast<double>(h);
            front.push_back({x, 1.0 - x * x});
        }
        pts = front;
        // Every filler point sits strictly below-left of some front point.
        for (std::size_t i = h; i < spec.n; ++i) {
            const Point& f = front[src.index(h)];
            const double dx = src.open_uniform();
            pts.push_back({f.x - dx, f.y - src.open_uniform()});
        }
        // Shuffle so the front is spread over the input order.
        for (std::size_t i = pts.size(); i > 1; --i)
            std::swap(pts[i - 1], pts[src.index(i)]);
        break;
    }
    case Generator::CircleQuadrant: {
        const double radius = param(spec, 0, 1.0);
        for (std::size_t i = 0; i < spec.n; ++i) {
            const double theta = 0.5 * std::numbers::pi * src.open_uniform();
            pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
        }
        break;
    }
    }
    return pts;
}

std::uint64_t default_seed(std::uint64_t fallback) noexcept {
    const char* env = std::getenv("PARETO_KCENTER_SEED");
    if (env == nullptr)
        return fallback;
    std::uint64_t seed = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc() || ptr != end)
        return fallback;
    return seed;
}

} // namespace pkc
