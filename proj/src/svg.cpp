#include "pkc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace pkc {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // never print "-0.000"
    if (std::string_view(buf) == "-0.000")
        return "0.000";
    return buf;
}

struct Frame {
    double min_x, min_y, scale;

    double sx(double x) const { return kMargin + (x - min_x) * scale; }
    double sy(double y) const { return kSize - kMargin - (y - min_y) * scale; }
};

} // namespace

std::string render_svg(std::span<const Point> points, const SkylineArray& sky,
                       std::span<const Point> centers, double lambda) {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            min_x = max_x = x;
            min_y = max_y = y;
            first = false;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const Point& p : points)
        grow(p.x, p.y);
    for (const Point& c : centers) {
        grow(c.x - lambda, c.y - lambda);
        grow(c.x + lambda, c.y + lambda);
    }
    const double extent = std::max(max_x - min_x, max_y - min_y);
    const Frame f{min_x, min_y, extent > 0 ? (kSize - 2 * kMargin) / extent : 1.0};

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"0 0 640 640\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";

    out += "<g class=\"disks\" fill=\"#4a90d9\" fill-opacity=\"0.15\" stroke=\"#4a90d9\">\n";
    for (const Point& c : centers)
        out += "<circle class=\"disk\" cx=\"" + num(f.sx(c.x)) + "\" cy=\"" + num(f.sy(c.y)) +
               "\" r=\"" + num(lambda * f.scale) + "\"/>\n";
    out += "</g>\n";

    out += "<g class=\"dominated\" fill=\"#999999\">\n";
    for (const Point& p : points)
        if (std::find(sky.begin(), sky.end(), p) == sky.end())
            out += "<circle cx=\"" + num(f.sx(p.x)) + "\" cy=\"" + num(f.sy(p.y)) + "\" r=\"2\"/>\n";
    out += "</g>\n";

    out += "<polyline class=\"skyline\" fill=\"none\" stroke=\"black\" points=\"";
    for (std::size_t i = 0; i < sky.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += num(f.sx(sky[i].x)) + "," + num(f.sy(sky[i].y));
    }
    out += "\"/>\n";
    out += "<g class=\"skyline-points\" fill=\"black\">\n";
    for (const Point& p : sky)
        out += "<circle cx=\"" + num(f.sx(p.x)) + "\" cy=\"" + num(f.sy(p.y)) + "\" r=\"3\"/>\n";
    out += "</g>\n";

    out += "<g class=\"centers\" fill=\"#d0021b\">\n";
    for (const Point& c : centers)
        out += "<rect x=\"" + num(f.sx(c.x) - 4) + "\" y=\"" + num(f.sy(c.y) - 4) +
               "\" width=\"8\" height=\"8\"/>\n";
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

} // namespace pkc
