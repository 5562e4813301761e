#pragma once

#include <cmath>
#include <limits>

namespace formlab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline double dist2(const Vec2& a, const Vec2& b) { return (a - b).norm2(); }

// Angle of v in [0, 2*pi). Zero vector maps to 0.
inline double polar_angle(const Vec2& v) {
    if (v.x == 0.0 && v.y == 0.0) return 0.0;
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += 2.0 * M_PI;
    // atan2(-0.0, 1.0) style results can round to exactly 2*pi after the shift
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}

inline Vec2 from_polar(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

// Scale v down so its norm does not exceed cap. cap < 0 is treated as 0.
inline Vec2 clamp_norm(const Vec2& v, double cap) {
    if (cap <= 0.0) return {0.0, 0.0};
    double n = v.norm();
    if (n <= cap) return v;
    return v * (cap / n);
}

}  // namespace formlab
