#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "pkc/counters.hpp"
#include "pkc/geometry.hpp"

namespace pkc {

struct RunReport {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t h = 0;
    std::size_t k = 0;
    double lambda_or_eps = 0.0;
    double seconds = 0.0;
    Counters counters;
    std::uint64_t digest = 0;
};

/// FNV-1a over the bit patterns of the x-sorted center coordinates followed
/// by the bits of lambda^2.
std::uint64_t result_digest(std::span<const Point> centers, double lambda_sq);

} // namespace pkc
