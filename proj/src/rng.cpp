#include "moea/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moea {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), eng_(mix64(seed)) {}

std::uint64_t Rng::raw() { return eng_(); }

double Rng::uniform() {
    // 53 high bits -> [0, 1)
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

std::size_t Rng::index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::index: n must be positive");
    if (n == 1) return 0;
    std::uint64_t mask = ~0ULL;
    std::uint64_t limit = n - 1;
    while ((mask >> 1) >= limit) mask >>= 1;
    for (;;) {
        std::uint64_t v = eng_() & mask;
        if (v < n) return static_cast<std::size_t>(v);
    }
}

Rng Rng::child(std::uint64_t stream) const { return Rng(mix64(seed_ ^ mix64(stream + 1))); }

}  // namespace moea
