#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moea {

/// Decision-space and objective-space vectors share one representation;
/// the aliases keep signatures readable.
using Vec = std::vector<double>;
using DecisionVector = Vec;
using ObjectiveVector = Vec;

/// Box constraints of the decision space.
struct Bounds {
    Vec lower;
    Vec upper;

    std::size_t dim() const { return lower.size(); }

    /// Throws std::invalid_argument unless lower[k] <= upper[k] for all k
    /// and both sides have equal, nonzero length.
    void validate() const;
};

/// One evaluated solution. eval_index is the value of the run's global
/// evaluation counter when f was computed; it is the only budget clock.
struct Individual {
    Vec x;
    Vec f;
    std::uint64_t eval_index = 0;
};

class Rng;

/// Pareto dominance for minimization: a is nowhere worse than b and
/// strictly better in at least one component. Irreflexive.
bool dominates(const Vec& a, const Vec& b);

/// Clips every component of x into its bound interval. Idempotent.
Vec clamp_to_bounds(Vec x, const Bounds& b);

/// Uniform sample of the box; one rng draw per dimension.
Vec random_point(const Bounds& b, Rng& rng);

bool all_finite(const Vec& v);

namespace detail {
[[noreturn]] void throw_size_mismatch(const char* where, std::size_t a, std::size_t b);
}

}  // namespace moea
