#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "formation_lab/rng.hpp"
#include "formation_lab/sensing.hpp"

using namespace formlab;

TEST_CASE("sensor and quantizer validation") {
    SensorModel s;
    validate_sensor(s);
    s.sigma = 0;
    CHECK_THROWS_AS(validate_sensor(s), InvalidInput);
    s.sigma = 1;
    s.n_samples = 0;
    CHECK_THROWS_AS(validate_sensor(s), InvalidInput);
    s.n_samples = 1;
    s.sigma_theta = -0.1;
    CHECK_THROWS_AS(validate_sensor(s), InvalidInput);

    QuantizerSpec q;
    validate_quantizer(q);
    CHECK(q.ring_width() == doctest::Approx(300.0 / 127.0));
    QuantizerSpec bad = q;
    bad.n_r = 1;
    CHECK_THROWS_AS(validate_quantizer(bad), InvalidInput);
    bad = q;
    bad.n_theta = 2;
    CHECK_THROWS_AS(validate_quantizer(bad), InvalidInput);
    bad = q;
    bad.l0 = 300;  // must sit strictly inside the sensing radius
    CHECK_THROWS_AS(validate_quantizer(bad), InvalidInput);
}

TEST_CASE("distance samples come from the right distribution") {
    SensorModel s;
    s.sigma = 2.0;
    s.n_samples = 100000;
    RngStream rng(21);
    std::vector<double> xs = sample_distances(10.0, s, rng);
    REQUIRE(xs.size() == 100000u);
    double sum = 0, sq = 0;
    for (double v : xs) {
        sum += v;
        sq += v * v;
    }
    double mean = sum / 1e5;
    double var = sq / 1e5 - mean * mean;
    CHECK(std::abs(mean - 10.0) < 10.0 * s.sigma / std::sqrt(1e5));
    CHECK(var == doctest::Approx(4.0).epsilon(0.05));

    // draws are not clamped: with sigma comparable to the distance some go
    // negative
    SensorModel wide;
    wide.sigma = 5.0;
    wide.n_samples = 1000;
    RngStream rng2(22);
    std::vector<double> ys = sample_distances(1.0, wide, rng2);
    CHECK(std::any_of(ys.begin(), ys.end(), [](double v) { return v < 0.0; }));
}

TEST_CASE("distance sampling is deterministic per seed") {
    SensorModel s;
    s.n_samples = 16;
    RngStream a(77), b(77);
    std::vector<double> xa = sample_distances(42.0, s, a);
    std::vector<double> xb = sample_distances(42.0, s, b);
    CHECK(xa == xb);
}

TEST_CASE("sample_distances rejects bad input") {
    SensorModel s;
    RngStream rng(1);
    CHECK_THROWS_AS(sample_distances(-1.0, s, rng), InvalidInput);
    CHECK_THROWS_AS(sample_distances(std::nan(""), s, rng), InvalidInput);
}

TEST_CASE("estimate_distance is the sample mean") {
    CHECK(estimate_distance({5.0}) == doctest::Approx(5.0));
    CHECK(estimate_distance({4.0, 6.0}) == doctest::Approx(5.0));
    CHECK(estimate_distance({1, 2, 3, 4}) == doctest::Approx(2.5));
    CHECK_THROWS_AS(estimate_distance({}), InvalidInput);
}

TEST_CASE("ring quantizer examples") {
    QuantizerSpec q;
    q.radius = 200;
    q.n_r = 5;
    // ring width 50; rings cover [0,50), [50,100), [100,150), [150,200]
    CHECK(quantize_ring(75, q) == 2);
    CHECK(quantize_ring(0, q) == 1);
    CHECK(quantize_ring(-3, q) == 1);
    CHECK(quantize_ring(200, q) == 4);
    CHECK(quantize_ring(500, q) == 4);  // clamped to the sensing radius

    QuantizerSpec fine;
    fine.radius = 200;
    fine.n_r = 201;
    CHECK(quantize_ring(199.9, fine) == 200);
}

TEST_CASE("ring boundaries land on their own ring") {
    QuantizerSpec q;
    q.radius = 200;
    q.n_r = 9;
    double w = q.ring_width();
    for (int h = 1; h <= q.n_r - 1; ++h) CHECK(quantize_ring((h - 1) * w, q) == h);
}

TEST_CASE("ring quantizer is monotone") {
    QuantizerSpec q;
    q.radius = 300;
    q.n_r = 64;
    int prev = 1;
    for (double r = 0; r <= 310; r += 0.37) {
        int h = quantize_ring(r, q);
        CHECK(h >= prev);
        CHECK(h >= 1);
        CHECK(h <= q.n_r - 1);
        prev = h;
    }
}

TEST_CASE("sector quantizer examples") {
    QuantizerSpec q;
    q.n_theta = 5;  // sector width pi/2
    CHECK(quantize_sector(0, q) == 1);
    CHECK(quantize_sector(M_PI, q) == 3);
    CHECK(quantize_sector(2 * M_PI - 1e-9, q) == 4);
    CHECK(quantize_sector(2 * M_PI, q) == 1);        // wraps
    CHECK(quantize_sector(-M_PI / 4, q) == 4);       // negative wraps too
    CHECK(quantize_sector(2 * M_PI + 0.1, q) == 1);
}

TEST_CASE("region midpoints") {
    QuantizerSpec q;
    q.radius = 200;
    q.n_r = 5;
    q.n_theta = 5;
    CHECK(ring_midpoint(1, q) == doctest::Approx(25.0));
    CHECK(ring_midpoint(4, q) == doctest::Approx(175.0));
    CHECK_THROWS_AS(ring_midpoint(0, q), InvalidInput);
    CHECK_THROWS_AS(ring_midpoint(5, q), InvalidInput);
    CHECK(sector_midpoint(1, q) == doctest::Approx(M_PI / 4));
    CHECK(sector_midpoint(4, q) == doctest::Approx(7 * M_PI / 4));
    CHECK_THROWS_AS(sector_midpoint(5, q), InvalidInput);

    // a representative re-quantizes into its own region
    for (int h = 1; h <= 4; ++h) CHECK(quantize_ring(ring_midpoint(h, q), q) == h);
    for (int j = 1; j <= 4; ++j) CHECK(quantize_sector(sector_midpoint(j, q), q) == j);
}

TEST_CASE("quantizer bit content") {
    CHECK(quant_bits(128) == doctest::Approx(7.0));
    CHECK(quant_bits(2) == doctest::Approx(1.0));
    CHECK(quant_bits(200) == doctest::Approx(7.6438561898));
    CHECK_THROWS_AS(quant_bits(1), InvalidInput);
}

TEST_CASE("noiseless single-sample pipeline reproduces direct quantization") {
    QuantizerSpec q;
    q.radius = 300;
    q.n_r = 128;
    SensorModel s;
    s.sigma = 1e-12;
    s.n_samples = 1;
    RngStream rng(5);
    for (double w : {3.7, 50.0, 123.4, 250.1, 299.0}) {
        std::vector<double> xs = sample_distances(w, s, rng);
        double est = estimate_distance(xs);
        CHECK(quantize_ring(est, q) == quantize_ring(w, q));
    }
}

TEST_CASE("bias measures") {
    CHECK(position_bias({1, 1}, {4, 5}) == doctest::Approx(5.0));
    CHECK(position_bias({2, 2}, {2, 2}) == doctest::Approx(0.0));

    std::vector<Vec2> finals = {{0, 0}, {3, 4}};
    std::vector<Vec2> dest = {{0, 0}, {0, 0}};
    CHECK(formation_bias(finals, dest) == doctest::Approx(2.5));
    CHECK_THROWS_AS(formation_bias({}, {}), InvalidInput);
    CHECK_THROWS_AS(formation_bias(finals, {{0, 0}}), InvalidInput);

    // order-insensitive when both lists are permuted together
    std::vector<Vec2> f2 = {finals[1], finals[0]};
    std::vector<Vec2> d2 = {dest[1], dest[0]};
    CHECK(formation_bias(f2, d2) == doctest::Approx(formation_bias(finals, dest)));
}
