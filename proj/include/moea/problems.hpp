#pragma once

#include <functional>
#include <string>
#include <vector>

#include "moea/core.hpp"

namespace moea::problems {

/// A benchmark instance: evaluator, box bounds, and a sampler of the true
/// (or best-known approximated) Pareto front used as the indicator
/// reference set.
struct Problem {
    std::string name;
    int m = 2;
    int d = 30;
    Bounds bounds;
    std::function<Vec(const Vec&)> evaluate;
    /// Returns at least n mutually nondominated front points (exactly n
    /// for the analytic bi-objective curves; simplex lattices for the
    /// tri-objective surfaces may exceed n).
    std::function<std::vector<Vec>(int)> sample_pf;
};

/// Names accepted by make(), in registry order.
std::vector<std::string> names();

/// Builds a registered instance. dim_override > 0 replaces the default
/// variable count where the suite allows it (zdt*, uf*); the engineering
/// instances have fixed dimension. Throws std::invalid_argument for
/// unknown names, listing the valid ones.
Problem make(const std::string& name, int dim_override = 0);

/// Locates a data asset (reference front files). Search order:
/// $MOEA_DATA_DIR, ./data, ../data, the compiled-in source data dir.
/// Throws std::runtime_error when not found.
std::string find_data_file(const std::string& filename);

}  // namespace moea::problems
