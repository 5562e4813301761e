#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace formlab {

// splitmix64 finalizer; used to derive well-separated child seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4ecda082ef79dULL;
    return z ^ (z >> 31);
}

// Deterministic random stream. All randomness in the library flows from one
// of these, so a run is reproducible from its seed alone. Gaussian draws use
// an explicit Box-Muller transform instead of std::normal_distribution: the
// standard does not pin down the distribution adapters, mt19937_64 itself is
// bit-exact everywhere.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(mix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Child stream independent of this stream's draw position. Used to give
    // each (robot, slot) / trial its own sequence so evaluation order and
    // consumption counts cannot perturb later draws.
    RngStream substream(std::uint64_t a, std::uint64_t b = 0) const {
        std::uint64_t s = mix64(seed_ ^ mix64(a ^ 0x517cc1b727220a95ULL));
        s = mix64(s ^ mix64(b ^ 0x2545f4914f6cdd1dULL));
        return RngStream(s);
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_int(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    // Box-Muller. Draws two uniforms per call; the sine branch is discarded,
    // which keeps every call an identical two-draw transaction.
    double normal(double mean, double sigma) {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sigma * r * std::cos(2.0 * M_PI * u2);
    }

    // Fisher-Yates permutation of {0, .., n-1}.
    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(uniform_int(static_cast<std::uint64_t>(i) + 1));
            std::swap(p[i], p[j]);
        }
        return p;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace formlab
