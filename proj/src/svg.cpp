#include "formation_lab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace formlab {

namespace {

const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

}  // namespace

void write_overlay_svg(const std::string& path, const Trajectory& t) {
    if (t.snapshots.empty()) throw InvalidInput("svg: empty trajectory");
    std::ofstream out(path);
    if (!out) throw InvalidInput("svg: cannot write " + path);

    double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
    auto grow = [&](const Vec2& p) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    };
    for (const SlotSnapshot& s : t.snapshots)
        for (const Vec2& p : s.positions) grow(p);
    for (const Vec2& p : t.destinations) grow(p);

    double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 10.0;
    lo_x -= margin;
    lo_y -= margin;
    hi_x += margin;
    hi_y += margin;
    double w = hi_x - lo_x, h = hi_y - lo_y;
    double scale = 800.0 / std::max(w, h);
    double width = w * scale, height = h * scale;

    // SVG y grows downward; flip the world.
    auto X = [&](double x) { return (x - lo_x) * scale; };
    auto Y = [&](double y) { return (hi_y - y) * scale; };

    size_t n = t.snapshots.front().positions.size();
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
        << num(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (size_t i = 0; i < n; ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.2\" opacity=\"0.8\" points=\"";
        for (const SlotSnapshot& s : t.snapshots)
            out << num(X(s.positions[i].x)) << ',' << num(Y(s.positions[i].y)) << ' ';
        out << "\"/>\n";
    }
    for (size_t i = 0; i < n; ++i) {
        const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const Vec2& p0 = t.snapshots.front().positions[i];
        out << "<circle cx=\"" << num(X(p0.x)) << "\" cy=\"" << num(Y(p0.y))
            << "\" r=\"4\" fill=\"" << color << "\"/>\n";
    }
    for (const Vec2& d : t.destinations)
        out << "<circle cx=\"" << num(X(d.x)) << "\" cy=\"" << num(Y(d.y))
            << "\" r=\"6\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    out << "</svg>\n";
}

}  // namespace formlab
