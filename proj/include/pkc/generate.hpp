#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pkc/geometry.hpp"

namespace pkc {

enum class Generator {
    UniformSquare,   // params: [side = 1]
    Clustered,       // params: [clusters = 5, sigma = 0.05]
    Staircase,       // params: [h = n]; h front points, the rest strictly dominated
    CircleQuadrant,  // params: [radius = 1]; every point on the skyline
};

const char* to_string(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;

struct InstanceSpec {
    Generator generator = Generator::UniformSquare;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::vector<double> params;
};

/// Deterministic: the same spec gives a bit-identical point list. Uses only
/// the raw mt19937_64 stream (no library distributions), so the output does
/// not depend on the standard library vendor.
std::vector<Point> generate(const InstanceSpec& spec);

/// Seed from PARETO_KCENTER_SEED if set and valid, else `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 1) noexcept;

} // namespace pkc
