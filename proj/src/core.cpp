#include "moea/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "moea/rng.hpp"

namespace moea {

namespace detail {
void throw_size_mismatch(const char* where, std::size_t a, std::size_t b) {
    throw std::invalid_argument(std::string(where) + ": size mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}
}  // namespace detail

void Bounds::validate() const {
    if (lower.empty() || lower.size() != upper.size())
        detail::throw_size_mismatch("Bounds", lower.size(), upper.size());
    for (std::size_t k = 0; k < lower.size(); ++k) {
        if (!(lower[k] <= upper[k]))
            throw std::invalid_argument("Bounds: lower[" + std::to_string(k) + "] > upper[" +
                                        std::to_string(k) + "]");
    }
}

bool dominates(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) detail::throw_size_mismatch("dominates", a.size(), b.size());
    bool strictly_better = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) return false;
        if (a[j] < b[j]) strictly_better = true;
    }
    return strictly_better;
}

Vec clamp_to_bounds(Vec x, const Bounds& b) {
    if (x.size() != b.dim()) detail::throw_size_mismatch("clamp_to_bounds", x.size(), b.dim());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < b.lower[k])
            x[k] = b.lower[k];
        else if (x[k] > b.upper[k])
            x[k] = b.upper[k];
    }
    return x;
}

Vec random_point(const Bounds& b, Rng& rng) {
    Vec x(b.dim());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = rng.uniform(b.lower[k], b.upper[k]);
    return x;
}

bool all_finite(const Vec& v) {
    for (double value : v)
        if (!std::isfinite(value)) return false;
    return true;
}

}  // namespace moea
