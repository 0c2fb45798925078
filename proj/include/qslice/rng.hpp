#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "qslice/quaternion.hpp"

namespace qslice {

/// splitmix64: tiny deterministic generator. Used instead of <random>
/// distributions so that reports are byte-identical across toolchains.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    Quaternion<double> quaternion_in_ball(double radius) {
        // rejection-free: direction from normalized components, radius ~ u^{1/4}
        Quaternion<double> d{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        double n = abs(d);
        if (n < 1e-12) d = Quaternion<double>{1};
        double r = radius * std::pow(uniform(), 0.25);
        return d * (r / abs(d));
    }

    /// Uniform-ish imaginary unit (point of the sphere S).
    Quaternion<double> unit_axis() {
        double u = uniform(-1, 1);
        double phi = uniform(0, 2 * std::numbers::pi);
        double s = std::sqrt(std::max(0.0, 1 - u * u));
        return {0, s * std::cos(phi), s * std::sin(phi), u};
    }
};

}  // namespace qslice
