#pragma once

#include <utility>
#include <vector>

#include "moea/core.hpp"
#include "moea/problems.hpp"
#include "moea/rng.hpp"

namespace moea::indicators {

/// Exact bi-objective hypervolume by a sorted staircase sweep. Points not
/// strictly below the reference in every coordinate are discarded.
double hv_exact_2d(std::vector<Vec> points, const Vec& ref);

/// Exact tri-objective hypervolume by a dimension sweep over f3 slabs.
double hv_exact_3d(std::vector<Vec> points, const Vec& ref);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo hypervolume for any dimension; samples the box spanned by
/// the pointwise ideal of `points` and the reference.
McEstimate hv_monte_carlo(const std::vector<Vec>& points, const Vec& ref, int samples, Rng& rng);

/// Dispatches to the exact sweep for m in {2, 3}; Monte Carlo otherwise
/// (1e5 samples, internally seeded).
double hv(const std::vector<Vec>& points, const Vec& ref);

/// Inverted generational distance: mean over reference points of the
/// Euclidean distance to the nearest approximation point.
double igd(const std::vector<Vec>& approx, const std::vector<Vec>& reference);

/// Per-problem indicator conventions: caches the reference front and its
/// ideal/nadir, and exposes the two hypervolume scalings used in reports.
class Suite {
public:
    explicit Suite(const problems::Problem& p, int reference_points = 10000);

    /// Objectives mapped by (f - lower) / (nadir - lower) with
    /// lower = min(ideal, 0), reference point 1.1 in every coordinate,
    /// result divided by 1.1^m. The platform convention the published
    /// ZDT/UF tables use.
    double hv_normalized(const std::vector<Vec>& points) const;

    /// Mapped by the front's own ideal/nadir, reference 1.1 per axis,
    /// undivided (upper bound 1.1^m); the convention used for the
    /// engineering instances.
    double hv_scaled(const std::vector<Vec>& points) const;

    double igd(const std::vector<Vec>& points) const;

    const std::vector<Vec>& reference_front() const { return front_; }
    const Vec& ideal() const { return ideal_; }
    const Vec& nadir() const { return nadir_; }

private:
    std::vector<Vec> front_;
    Vec ideal_, nadir_;
    int m_;
    double hv_mapped(const std::vector<Vec>& points, const Vec& lower) const;
};

/// One recorded population state of a run, by objective vectors.
struct PopulationSnapshot {
    long long evals = 0;
    std::vector<Vec> objectives;
};

/// Hypervolume of the latest snapshot at or before each checkpoint.
/// Checkpoints preceding the first snapshot or beyond the last one are
/// omitted and reported through `skipped` when given.
std::vector<std::pair<long long, double>> hv_trajectory(
    const std::vector<PopulationSnapshot>& run_log, const Suite& suite, bool normalized,
    const std::vector<long long>& checkpoints, std::vector<long long>* skipped = nullptr);

}  // namespace moea::indicators
