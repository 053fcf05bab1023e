#include "moea/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moea::ops {

std::vector<double> rank_polynomial_values(const LoWeights& w) {
    if (w.l < 1) throw std::invalid_argument("rank_polynomial_values: l must be positive");
    std::vector<double> p(static_cast<std::size_t>(w.l));
    for (int i = 1; i <= w.l; ++i) {
        double r = static_cast<double>(i) / w.l;
        p[i - 1] = ((w.a * r + w.b) * r + w.c) * r + w.d;
    }
    return p;
}

std::vector<double> lo_base_weights(const LoWeights& w) {
    std::vector<double> p = rank_polynomial_values(w);
    double peak = *std::max_element(p.begin(), p.end());
    double sum = 0.0;
    for (double& v : p) {
        v = std::exp(v - peak);
        sum += v;
    }
    for (double& v : p) v /= sum;
    return p;
}

std::vector<double> lo_base_weights(int l) {
    LoWeights w;
    w.l = l;
    return lo_base_weights(w);
}

std::vector<double> ablation_weights(AblationKind kind, int l, Rng& rng) {
    if (l < 1) throw std::invalid_argument("ablation_weights: l must be positive");
    std::vector<double> w(static_cast<std::size_t>(l));
    switch (kind) {
        case AblationKind::Random: {
            double sum = 0.0;
            for (double& v : w) {
                v = rng.uniform();
                sum += v;
            }
            if (sum == 0.0) {
                std::fill(w.begin(), w.end(), 1.0 / l);
            } else {
                for (double& v : w) v /= sum;
            }
            break;
        }
        case AblationKind::Equal:
            std::fill(w.begin(), w.end(), 1.0 / l);
            break;
        case AblationKind::Linear: {
            // arithmetic sequence summing to one, largest weight first;
            // for l = 10 this is 0.19, 0.17, ..., 0.01
            double step = 2.0 / (static_cast<double>(l) * l);
            double first = (1.0 + static_cast<double>(l - 1) * l * step / 2.0) / l;
            for (int i = 0; i < l; ++i) w[i] = first - step * i;
            break;
        }
    }
    return w;
}

Vec weighted_recombination(const ParentRefs& parents_best_first, const Vec& incumbent,
                           std::span<const double> weights, double theta, double dim_prob,
                           Rng& rng, const Bounds& bounds) {
    const std::size_t l = parents_best_first.size();
    if (l == 0) throw std::invalid_argument("weighted_recombination: empty parent set");
    if (weights.size() != l)
        detail::throw_size_mismatch("weighted_recombination", weights.size(), l);
    const std::size_t d = incumbent.size();
    for (const Vec* parent : parents_best_first)
        if (parent->size() != d)
            detail::throw_size_mismatch("weighted_recombination", parent->size(), d);

    // one noise draw per parent, shared across dimensions
    std::vector<double> w(weights.begin(), weights.end());
    if (theta != 0.0)
        for (double& v : w) v += theta * rng.normal();

    Vec child = incumbent;
    for (std::size_t k = 0; k < d; ++k) {
        if (!rng.chance(dim_prob)) continue;
        double value = 0.0;
        for (std::size_t i = 0; i < l; ++i) value += w[i] * (*parents_best_first[i])[k];
        child[k] = value;
    }
    return clamp_to_bounds(std::move(child), bounds);
}

Vec lo_offspring(const ParentRefs& parents_best_first, const Vec& incumbent, const LoWeights& w,
                 Rng& rng, const Bounds& bounds) {
    if (static_cast<int>(parents_best_first.size()) != w.l)
        detail::throw_size_mismatch("lo_offspring", parents_best_first.size(),
                                    static_cast<std::size_t>(w.l));
    std::vector<double> base = lo_base_weights(w);
    return weighted_recombination(parents_best_first, incumbent, base, w.theta, w.dim_prob, rng,
                                  bounds);
}

Vec sbx_crossover(const Vec& p1, const Vec& p2, double eta_c, Rng& rng, const Bounds& bounds) {
    if (p1.size() != p2.size()) detail::throw_size_mismatch("sbx_crossover", p1.size(), p2.size());
    Vec child = p1;
    for (std::size_t k = 0; k < p1.size(); ++k) {
        if (!rng.chance(0.5)) continue;
        double a = p1[k], b = p2[k];
        if (std::abs(a - b) <= 1e-14) continue;
        double u = rng.uniform();
        double beta = (u <= 0.5) ? std::pow(2.0 * u, 1.0 / (eta_c + 1.0))
                                 : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta_c + 1.0));
        double c1 = 0.5 * ((1.0 + beta) * a + (1.0 - beta) * b);
        double c2 = 0.5 * ((1.0 - beta) * a + (1.0 + beta) * b);
        child[k] = rng.chance(0.5) ? c1 : c2;
    }
    return clamp_to_bounds(std::move(child), bounds);
}

Vec polynomial_mutation(const Vec& x, double per_var_prob, double eta_m, Rng& rng,
                        const Bounds& bounds) {
    if (per_var_prob < 0.0 || per_var_prob > 1.0)
        throw std::invalid_argument("polynomial_mutation: probability outside [0, 1]");
    Vec y = x;
    const double mut_pow = 1.0 / (eta_m + 1.0);
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (!rng.chance(per_var_prob)) continue;
        double lo = bounds.lower[k], hi = bounds.upper[k];
        double span = hi - lo;
        if (span <= 0.0) continue;
        double v = y[k];
        double d1 = (v - lo) / span;
        double d2 = (hi - v) / span;
        double u = rng.uniform();
        double deltaq;
        if (u <= 0.5) {
            double xy = 1.0 - d1;
            double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            double xy = 1.0 - d2;
            double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        y[k] = v + deltaq * span;
    }
    return clamp_to_bounds(std::move(y), bounds);
}

Vec de_rand_1(const Vec& xi, const Vec& xj, const Vec& xk, double f, double cr, Rng& rng,
              const Bounds& bounds) {
    if (xi.size() != xj.size()) detail::throw_size_mismatch("de_rand_1", xi.size(), xj.size());
    if (xi.size() != xk.size()) detail::throw_size_mismatch("de_rand_1", xi.size(), xk.size());
    Vec child = xi;
    std::size_t forced = rng.index(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        if (k == forced || rng.chance(cr)) child[k] = xi[k] + f * (xj[k] - xk[k]);
    }
    return clamp_to_bounds(std::move(child), bounds);
}

}  // namespace moea::ops
