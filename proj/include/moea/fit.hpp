#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "moea/llm.hpp"
#include "moea/operators.hpp"

namespace moea::fit {

/// One regression row: the k-th variable of every rank-sorted parent, and
/// the k-th variable of the designated offspring.
struct RegressionSample {
    std::vector<double> s;
    double r = 0.0;
};

struct SingularSystem : std::runtime_error {
    std::vector<int> columns;
    explicit SingularSystem(std::vector<int> cols);
};

/// One sample per variable dimension per record (d samples per call). The
/// designated response is the first parsed offspring; with
/// sample_every_offspring, each parsed offspring contributes its own d
/// samples. Records must agree on the parent count l; records without
/// offspring are skipped. Throws std::invalid_argument on inconsistent l.
std::vector<RegressionSample> extract_samples(const std::vector<llm::InteractionRecord>& records,
                                              bool sample_every_offspring = false);

/// Intercept-free least squares: minimizes ||S w - r||_2 over w. Requires
/// at least l samples; throws SingularSystem naming the deficient columns
/// when the normal matrix is rank deficient.
std::vector<double> fit_linear(const std::vector<RegressionSample>& samples);

/// Degree-3 least-squares fit of the raw per-rank weights against the
/// normalized ranks i/l. Needs at least four ranks. Returns {a, b, c, d}
/// for a*r^3 + b*r^2 + c*r + d.
std::array<double, 4> fit_rank_polynomial(const std::vector<double>& raw_weights);

/// Scaled residual spread: std(S w - r) over all samples divided by the
/// grand mean of all input values. Throws std::invalid_argument when that
/// mean is zero.
double estimate_theta(const std::vector<RegressionSample>& samples,
                      const std::vector<double>& weights);

struct FitResult {
    std::vector<double> raw_weights;  // least-squares solution per rank, comparable pre-softmax
    std::array<double, 4> poly{};     // cubic over normalized rank
    double theta = 0.0;
    std::size_t sample_count = 0;
    double residual_norm = 0.0;
};

/// extract -> fit_linear -> fit_rank_polynomial -> estimate_theta.
FitResult distill_fit(const std::vector<llm::InteractionRecord>& records,
                      bool sample_every_offspring = false);

/// Same pipeline but fitting each record separately and averaging the
/// per-call weights before the polynomial step. Every record must carry at
/// least l variable dimensions.
FitResult distill_fit_per_call(const std::vector<llm::InteractionRecord>& records);

/// Packages a fit as an operator; the per-dimension probability defaults
/// to 0.1 and is not estimated from data.
ops::LoWeights to_operator(const FitResult& fit, double dim_prob = 0.1);

std::string fit_report(const FitResult& fit);

}  // namespace moea::fit
