#pragma once

// Deterministic RNG used everywhere in the pipeline.
//
// SplitMix64 core with explicit uniform / gaussian mappings, so two builds
// (or two implementations) produce identical streams for identical seeds.
// std:: distributions are deliberately avoided: their output is not pinned
// by the standard.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace rflab {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // SplitMix64 step (Steele/Lea/Flood 2014).
    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n), n > 0. Modulo bias is < 2^-32 for n < 2^32.
    uint64_t below(uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller; draws two uniforms per pair.
    void gaussian_pair(double& a, double& b) {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        a = r * std::cos(t);
        b = r * std::sin(t);
    }

    double gaussian() {
        double a, b;
        gaussian_pair(a, b);
        return a;  // second value dropped; keeps the stream position simple
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<size_t> permutation(size_t n) {
        std::vector<size_t> p(n);
        for (size_t i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    uint64_t state_;
};

// Derives a child seed from (seed, salt). One SplitMix64 step over the
// mixed pair; documented so external tooling can reproduce substreams.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace rflab
