#include "pkc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "pkc/error.hpp"

namespace pkc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

} // namespace

std::vector<Point> read_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);

        double coords[2];
        std::size_t found = 0;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        while (true) {
            while (p < end && is_space(*p))
                ++p;
            if (p == end)
                break;
            if (found == 2)
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two numbers");
            // from_chars rejects a leading '+', which is fine for this format.
            auto [next, ec] = std::from_chars(p, end, coords[found]);
            if (ec != std::errc() || (next < end && !is_space(*next)))
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": malformed number");
            ++found;
            p = next;
        }
        if (found == 0)
            continue;
        if (found != 2)
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two numbers");
        pts.push_back({coords[0], coords[1]});
    }
    return pts;
}

std::vector<Point> read_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    return read_points(in);
}

std::string format_coordinate(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

void write_points(std::ostream& out, std::span<const Point> pts) {
    for (const Point& p : pts)
        out << format_coordinate(p.x) << ' ' << format_coordinate(p.y) << '\n';
}

} // namespace pkc
