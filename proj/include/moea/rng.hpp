#pragma once

#include <cstdint>
#include <random>

namespace moea {

/// splitmix64 finalizer; used for seeding and stream derivation.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic random stream.
///
/// Wraps the standard-specified mt19937_64 engine but implements every
/// distribution by hand, so that a given seed produces bit-identical
/// sequences regardless of platform or standard library. A stream is
/// single-owner: to hand randomness to another component, derive an
/// independently seeded child with child().
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t raw();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller; caches the paired deviate.
    double normal();

    /// Uniform on {0, ..., n-1}; n must be positive. Rejection sampled.
    std::size_t index(std::size_t n);

    /// True with probability p.
    bool chance(double p) { return uniform() < p; }

    /// Independent stream derived from this stream's seed and a label.
    Rng child(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace moea
