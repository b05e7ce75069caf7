#pragma once

#include <complex>
#include <cstdint>

namespace chm {

/// Seedable 64-bit generator (splitmix64). Used for all sampling so that
/// runs are reproducible across platforms from the seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on the circle |z| = 1.
    std::complex<double> unimodular() {
        double t = uniform(0.0, 6.283185307179586476925286766559);
        return {std::cos(t), std::sin(t)};
    }

    /// Uniform on the disk |z| <= rmax (area measure).
    std::complex<double> in_disk(double rmax) {
        double r = rmax * std::sqrt(uniform());
        return r * unimodular();
    }

private:
    std::uint64_t state_;
};

}  // namespace chm
