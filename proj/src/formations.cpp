#include "formation_lab/formations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace formlab {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::Circle: return "circle";
        case Shape::Square: return "square";
        case Shape::Triangle: return "triangle";
    }
    return "?";
}

Shape shape_from_name(const std::string& name) {
    if (name == "circle") return Shape::Circle;
    if (name == "square") return Shape::Square;
    if (name == "triangle") return Shape::Triangle;
    throw InvalidInput("unknown shape: " + name);
}

namespace {

// Subtract the centroid so the slot set satisfies the formation invariant.
Formation recentred(std::vector<Vec2> slots) {
    Vec2 c = centroid(slots);
    for (Vec2& s : slots) s -= c;
    return make_formation(std::move(slots));
}

}  // namespace

Formation circle_formation(int n, double area) {
    if (n < 1) throw InvalidInput("circle: need n >= 1 slots");
    if (!(area > 0.0)) throw InvalidInput("circle: area must be > 0");
    if (n == 1) return make_formation({Vec2{0.0, 0.0}});
    double r = std::sqrt(area / M_PI);
    std::vector<Vec2> slots;
    slots.reserve(n);
    for (int k = 0; k < n; ++k)
        slots.push_back(from_polar(r, 2.0 * M_PI * k / n));
    return recentred(std::move(slots));
}

Formation square_formation(int n, double area) {
    if (n < 2) throw InvalidInput("square: need n >= 2 slots");
    if (!(area > 0.0)) throw InvalidInput("square: area must be > 0");
    double side = std::sqrt(area);
    double half = side / 2.0;
    double perimeter = 4.0 * side;
    double spacing = perimeter / n;
    std::vector<Vec2> slots;
    slots.reserve(n);
    for (int k = 0; k < n; ++k) {
        // Walk clockwise from the top edge midpoint. d is arc length along
        // the perimeter; corners sit at d = half, half + side, ...
        double d = spacing * k;
        Vec2 p;
        if (d < half) {
            p = {d, half};
        } else if (d < half + side) {
            p = {half, half - (d - half)};
        } else if (d < half + 2.0 * side) {
            p = {half - (d - half - side), -half};
        } else if (d < half + 3.0 * side) {
            p = {-half, -half + (d - half - 2.0 * side)};
        } else {
            p = {-half + (d - half - 3.0 * side), half};
        }
        slots.push_back(p);
    }
    return recentred(std::move(slots));
}

namespace {

// Enumerate legal base-interior counts: y >= 0, x = (n - 3 - y) / 2 >= 0 with
// matching parity.
std::vector<int> triangle_bottom_options(int n) {
    std::vector<int> out;
    for (int y = 0; y <= n - 3; ++y)
        if ((n - 3 - y) % 2 == 0) out.push_back(y);
    return out;
}

}  // namespace

Formation triangle_formation(int n, double a, double b, int bottom_count) {
    if (n < 3) throw InvalidInput("triangle: need n >= 3 slots");
    if (!(a > 0.0) || !(b > 0.0)) throw InvalidInput("triangle: dimensions must be > 0");

    std::vector<int> options = triangle_bottom_options(n);
    if (options.empty()) throw InvalidInput("triangle: no legal slot split for n");

    Vec2 apex{0.0, 2.0 * a / 3.0};
    Vec2 bl{-b, -a / 3.0};
    Vec2 br{b, -a / 3.0};
    double waist_len = dist(apex, bl);
    double base_len = 2.0 * b;

    int y;
    if (bottom_count >= 0) {
        if (std::find(options.begin(), options.end(), bottom_count) == options.end())
            throw InvalidInput("triangle: bottom_count does not fit 3 + 2x + y = n");
        y = bottom_count;
    } else {
        // Pick the split whose waist and base slot spacings are closest.
        y = options[0];
        double best = std::numeric_limits<double>::infinity();
        for (int cand : options) {
            int x = (n - 3 - cand) / 2;
            double d = std::abs(waist_len / (x + 1) - base_len / (cand + 1));
            if (d < best) {
                best = d;
                y = cand;
            }
        }
    }
    int x = (n - 3 - y) / 2;

    std::vector<Vec2> slots;
    slots.reserve(n);
    slots.push_back(apex);
    slots.push_back(bl);
    slots.push_back(br);
    for (int k = 1; k <= x; ++k) {
        double t = static_cast<double>(k) / (x + 1);
        slots.push_back(apex + (bl - apex) * t);
    }
    for (int k = 1; k <= x; ++k) {
        double t = static_cast<double>(k) / (x + 1);
        slots.push_back(apex + (br - apex) * t);
    }
    for (int k = 1; k <= y; ++k) {
        double t = static_cast<double>(k) / (y + 1);
        slots.push_back(bl + (br - bl) * t);
    }
    return recentred(std::move(slots));
}

Formation make_formation_from_spec(const FormationSpec& spec) {
    switch (spec.shape) {
        case Shape::Circle: return circle_formation(spec.count, spec.area);
        case Shape::Square: return square_formation(spec.count, spec.area);
        case Shape::Triangle: {
            double s = std::sqrt(spec.area);
            return triangle_formation(spec.count, s, s,
                                      spec.triangle_bottom.value_or(-1));
        }
    }
    throw InvalidInput("unknown shape");
}

int leading_slot(const Formation& f) {
    if (f.size() == 0) throw InvalidInput("leading_slot: empty formation");
    int best = 0;
    for (int i = 1; i < f.size(); ++i) {
        const Vec2& p = f.slots[i];
        const Vec2& q = f.slots[best];
        if (p.y > q.y || (p.y == q.y && p.x < q.x)) best = i;
    }
    return best;
}

Vec2 optimal_center(const std::vector<Vec2>& initial) {
    return centroid(initial);
}

}  // namespace formlab
