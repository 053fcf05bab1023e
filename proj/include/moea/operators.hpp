#pragma once

#include <span>
#include <vector>

#include "moea/core.hpp"
#include "moea/rng.hpp"

namespace moea::ops {

/// Parameters of the distilled linear operator: the cubic describing the
/// pre-softmax weight as a function of normalized parent rank, the noise
/// scale applied to the softmaxed weights, the per-dimension application
/// probability, and the number of input parents. Defaults are the shipped
/// operator derived from logged LLM interactions.
struct LoWeights {
    double a = -0.111;
    double b = 1.037;
    double c = -1.291;
    double d = 0.445;
    double theta = 0.5;
    double dim_prob = 0.1;
    int l = 10;
};

/// Knobs of the classical operators and of offspring scheduling.
struct OperatorConfig {
    double sigma1 = 1.0;       // probability the primary operator fires
    double sigma2 = 0.9;       // probability an offspring is mutated
    double eta_c = 20.0;       // SBX distribution index
    double eta_m = 20.0;       // polynomial mutation distribution index
    double de_f = 0.5;         // DE scale factor, conventionally in [0.4, 1]
    double de_cr = 1.0;        // DE binomial crossover rate
    double mut_per_var = 0.0;  // per-variable mutation probability; 0 = 1/d
    int s = 2;                 // offspring per linear/LLM operator call
};

/// Pre-softmax cubic evaluated at the normalized ranks i/l, i = 1..l
/// (rank 1 = best parent).
std::vector<double> rank_polynomial_values(const LoWeights& w);

/// Softmax of the rank polynomial: strictly positive, sums to one.
std::vector<double> lo_base_weights(const LoWeights& w);
std::vector<double> lo_base_weights(int l);

enum class AblationKind { Random, Equal, Linear };

/// Naive weight settings for the linear operator: Random draws fresh
/// normalized uniforms per call, Equal is 1/l everywhere, Linear is the
/// arithmetic sequence summing to one with the largest weight on rank 1.
std::vector<double> ablation_weights(AblationKind kind, int l, Rng& rng);

using ParentRefs = std::vector<const Vec*>;

/// Weighted recombination of rank-sorted parents. The child starts as a
/// copy of the incumbent; each dimension independently, with probability
/// dim_prob, becomes the weighted sum of the parents under weights
/// perturbed by theta * N(0,1) (one draw per parent per call, shared
/// across dimensions, no renormalization). Result is clamped.
Vec weighted_recombination(const ParentRefs& parents_best_first, const Vec& incumbent,
                           std::span<const double> weights, double theta, double dim_prob,
                           Rng& rng, const Bounds& bounds);

/// The distilled linear operator: weighted_recombination under
/// lo_base_weights(w), theta = w.theta, dim_prob = w.dim_prob.
Vec lo_offspring(const ParentRefs& parents_best_first, const Vec& incumbent,
                 const LoWeights& w, Rng& rng, const Bounds& bounds);

/// Simulated binary crossover, one child, per-variable exchange
/// probability 0.5, clamped.
Vec sbx_crossover(const Vec& p1, const Vec& p2, double eta_c, Rng& rng, const Bounds& bounds);

/// Bounded polynomial mutation, each variable independently with
/// per_var_prob.
Vec polynomial_mutation(const Vec& x, double per_var_prob, double eta_m, Rng& rng,
                        const Bounds& bounds);

/// DE/rand/1 with binomial crossover against the base parent xi: the
/// trial vector xi + f*(xj - xk) enters per dimension with rate cr, with
/// one guaranteed dimension. Clamped.
Vec de_rand_1(const Vec& xi, const Vec& xj, const Vec& xk, double f, double cr, Rng& rng,
              const Bounds& bounds);

}  // namespace moea::ops
