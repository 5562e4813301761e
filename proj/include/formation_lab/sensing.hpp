#pragma once

#include <cmath>
#include <vector>

#include "formation_lab/core.hpp"
#include "formation_lab/rng.hpp"

namespace formlab {

// Distance sensing: n_samples independent Gaussian reads of the true
// distance with std dev sigma. Bearing sensing: a single Gaussian read with
// std dev sigma_theta.
struct SensorModel {
    double sigma = 1.0;
    int n_samples = 10;
    double sigma_theta = 0.0;
};

inline void validate_sensor(const SensorModel& s) {
    if (!(s.sigma > 0.0)) throw InvalidInput("sensor: sigma must be > 0");
    if (s.n_samples < 1) throw InvalidInput("sensor: need at least one sample");
    if (!(s.sigma_theta >= 0.0)) throw InvalidInput("sensor: sigma_theta must be >= 0");
}

// Polar quantizer: n_r ring boundaries at radius R * (h - 1) / (n_r - 1) and
// n_theta sector boundaries at angle 2*pi * (j - 1) / (n_theta - 1), giving
// n_r - 1 rings and n_theta - 1 sectors. l0 is the prior range used by the
// estimation bound; it must sit inside the sensing radius.
struct QuantizerSpec {
    double radius = 300.0;   // R
    int n_r = 128;
    int n_theta = 25;
    double l0 = 120.0;

    double ring_width() const { return radius / (n_r - 1); }
    double sector_width() const { return 2.0 * M_PI / (n_theta - 1); }
};

inline void validate_quantizer(const QuantizerSpec& q) {
    if (!(q.radius > 0.0)) throw InvalidInput("quantizer: radius must be > 0");
    if (q.n_r < 2) throw InvalidInput("quantizer: need at least 2 ring boundaries");
    if (q.n_theta < 3) throw InvalidInput("quantizer: need at least 3 sector boundaries");
    if (!(q.l0 > 0.0) || !(q.l0 < q.radius))
        throw InvalidInput("quantizer: l0 must satisfy 0 < l0 < radius");
}

inline std::vector<double> sample_distances(double true_w, const SensorModel& s,
                                            RngStream& rng) {
    validate_sensor(s);
    if (!std::isfinite(true_w) || true_w < 0.0)
        throw InvalidInput("sample_distances: true distance must be finite and >= 0");
    std::vector<double> out(s.n_samples);
    for (double& v : out) v = rng.normal(true_w, s.sigma);  // draws are unclamped
    return out;
}

inline double estimate_distance(const std::vector<double>& samples) {
    if (samples.empty()) throw InvalidInput("estimate_distance: no samples");
    double sum = 0.0;
    for (double v : samples) {
        if (!std::isfinite(v)) throw InvalidInput("estimate_distance: non-finite sample");
        sum += v;
    }
    return sum / static_cast<double>(samples.size());
}

// Ring index in 1..n_r-1. Ring h spans [R*(h-1), R*h) / (n_r-1); estimates
// are clamped into [0, R] first and r = R lands in the outermost ring.
inline int quantize_ring(double r, const QuantizerSpec& q) {
    validate_quantizer(q);
    if (!std::isfinite(r)) throw InvalidInput("quantize_ring: non-finite input");
    double clamped = std::min(std::max(r, 0.0), q.radius);
    int h = static_cast<int>(clamped / q.ring_width()) + 1;
    return std::min(h, q.n_r - 1);
}

// Sector index in 1..n_theta-1. Input angle is normalized into [0, 2*pi).
inline int quantize_sector(double theta, const QuantizerSpec& q) {
    validate_quantizer(q);
    if (!std::isfinite(theta)) throw InvalidInput("quantize_sector: non-finite input");
    double t = std::fmod(theta, 2.0 * M_PI);
    if (t < 0.0) t += 2.0 * M_PI;
    int j = static_cast<int>(t / q.sector_width()) + 1;
    return std::min(j, q.n_theta - 1);
}

// Radial midpoint of ring h: the dequantized distance estimate.
inline double ring_midpoint(int h, const QuantizerSpec& q) {
    if (h < 1 || h > q.n_r - 1) throw InvalidInput("ring_midpoint: ring out of range");
    return q.ring_width() * (static_cast<double>(h) - 0.5);
}

// Angular midpoint of sector j.
inline double sector_midpoint(int j, const QuantizerSpec& q) {
    if (j < 1 || j > q.n_theta - 1) throw InvalidInput("sector_midpoint: sector out of range");
    return q.sector_width() * (static_cast<double>(j) - 0.5);
}

// Bits carried by the ring index.
inline double quant_bits(int n_r) {
    if (n_r < 2) throw InvalidInput("quant_bits: need at least 2 ring boundaries");
    return std::log2(static_cast<double>(n_r));
}

inline double position_bias(const Vec2& final_pos, const Vec2& destination) {
    if (!final_pos.finite() || !destination.finite())
        throw InvalidInput("position_bias: non-finite input");
    return dist(final_pos, destination);
}

// Mean per-robot deviation between final positions and their destinations.
inline double formation_bias(const std::vector<Vec2>& finals,
                             const std::vector<Vec2>& destinations) {
    if (finals.empty() || finals.size() != destinations.size())
        throw InvalidInput("formation_bias: size mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < finals.size(); ++i)
        sum += position_bias(finals[i], destinations[i]);
    return sum / static_cast<double>(finals.size());
}

}  // namespace formlab
