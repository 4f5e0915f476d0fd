#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pkc/geometry.hpp"

namespace pkc {

/// Point files: one "x y" pair per line, whitespace separated. '#' starts a
/// comment; blank lines are skipped. Throws Error(ParseError) naming the
/// offending line.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_point_file(const std::string& path);

/// Shortest round-trip decimal form of a coordinate (at most 17 significant
/// digits), so write -> read reproduces every bit.
std::string format_coordinate(double v);

void write_points(std::ostream& out, std::span<const Point> pts);

} // namespace pkc
