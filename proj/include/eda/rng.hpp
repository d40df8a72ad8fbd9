#pragma once

#include <cmath>
#include <cstdint>

namespace eda::numkit {

/// Seedable deterministic random stream (SplitMix64).
///
/// The generator is fully specified here so any implementation can reproduce
/// the exact sequence from a seed:
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   output = z ^ (z >> 31)
///
/// Derived quantities:
///   next_double()      = (next_u64() >> 11) * 2^-53            in [0, 1)
///   next_u64_below(n)  = next_u64() % n                        (documented modulo)
///   normal()           = Box-Muller on u1 in (0, 1], u2 in [0, 1), second
///                        value cached
///
/// A stream is single-owner. Parallel components take independently seeded
/// streams via derive(component_index), i.e. seed XOR component-index.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t next_u64_below(std::uint64_t n) {
        return next_u64() % n;
    }

    /// Standard normal deviate (Box-Muller, cached pair).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1] so log(u1) is finite.
        const double u1 =
            (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double std) { return mean + std * normal(); }

    /// Independently seeded stream for a parallel component (seed XOR index).
    /// Callers pass distinct non-zero indices; index 0 clones this stream.
    RngStream derive(std::uint64_t component_index) const {
        return RngStream(seed_ ^ component_index);
    }

    /// In-place Fisher-Yates shuffle of an index-like container.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(next_u64_below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace eda::numkit
