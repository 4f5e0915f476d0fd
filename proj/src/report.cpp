#include "pkc/report.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace pkc {

namespace {

void mix(std::uint64_t& h, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v + 0.0);
    for (int i = 0; i < 8; ++i) {
        h ^= (bits >> (8 * i)) & 0xffU;
        h *= 0x100000001b3ULL;
    }
}

} // namespace

std::uint64_t result_digest(std::span<const Point> centers, double lambda_sq) {
    std::vector<Point> sorted(centers.begin(), centers.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& a, const Point& b) { return cmp_perturbed_right(a, b) < 0; });
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Point& p : sorted) {
        mix(h, p.x);
        mix(h, p.y);
    }
    mix(h, lambda_sq);
    return h;
}

} // namespace pkc
