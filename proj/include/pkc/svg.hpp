#pragma once

#include <span>
#include <string>

#include "pkc/geometry.hpp"

namespace pkc {

/// Deterministic SVG: all points (dominated ones in grey), the skyline as a
/// polyline, and one disk of radius `lambda` per center. The output depends
/// only on the arguments.
std::string render_svg(std::span<const Point> points, const SkylineArray& sky,
                       std::span<const Point> centers, double lambda);

} // namespace pkc
