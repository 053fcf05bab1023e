#include "moea/fit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "moea/io.hpp"

namespace moea::fit {

namespace {

std::string columns_message(const std::vector<int>& cols) {
    std::string msg = "fit_linear: rank-deficient design matrix; deficient columns:";
    for (int c : cols) msg += " " + std::to_string(c);
    return msg;
}

/// Solves the symmetric positive semi-definite system A w = b by Gaussian
/// elimination with partial pivoting; near-zero pivots are reported as
/// deficient columns.
std::vector<double> solve_spd(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(a[i][i]));
    if (scale == 0.0) scale = 1.0;
    const double tol = scale * 1e-12 * static_cast<double>(n);

    std::vector<int> deficient;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            std::swap(b[pivot], b[k]);
        }
        if (std::abs(a[k][k]) <= tol) {
            deficient.push_back(static_cast<int>(k));
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double factor = a[i][k] / a[k][k];
            if (factor == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
            b[i] -= factor * b[k];
        }
    }
    if (!deficient.empty()) throw SingularSystem(deficient);

    std::vector<double> w(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double sum = b[k];
        for (std::size_t j = k + 1; j < n; ++j) sum -= a[k][j] * w[j];
        w[k] = sum / a[k][k];
    }
    return w;
}

}  // namespace

SingularSystem::SingularSystem(std::vector<int> cols)
    : std::runtime_error(columns_message(cols)), columns(std::move(cols)) {}

std::vector<RegressionSample> extract_samples(const std::vector<llm::InteractionRecord>& records,
                                              bool sample_every_offspring) {
    std::vector<RegressionSample> samples;
    std::size_t l = 0;
    for (const auto& rec : records) {
        if (rec.offspring.empty() || rec.parents.empty()) continue;
        if (l == 0) l = rec.parents.size();
        if (rec.parents.size() != l)
            throw std::invalid_argument("extract_samples: inconsistent parent count " +
                                        std::to_string(rec.parents.size()) + " vs " +
                                        std::to_string(l));
        const std::size_t d = rec.parents.front().size();
        std::size_t responses = sample_every_offspring ? rec.offspring.size() : 1;
        for (std::size_t o = 0; o < responses; ++o) {
            const Vec& off = rec.offspring[o];
            if (off.size() != d)
                detail::throw_size_mismatch("extract_samples", off.size(), d);
            for (std::size_t k = 0; k < d; ++k) {
                RegressionSample s;
                s.s.resize(l);
                for (std::size_t i = 0; i < l; ++i) s.s[i] = rec.parents[i][k];
                s.r = off[k];
                samples.push_back(std::move(s));
            }
        }
    }
    return samples;
}

std::vector<double> fit_linear(const std::vector<RegressionSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("fit_linear: no samples");
    const std::size_t l = samples.front().s.size();
    if (samples.size() < l)
        throw std::invalid_argument("fit_linear: fewer samples than unknowns");
    // accumulate the normal equations S^T S w = S^T r
    std::vector<std::vector<double>> a(l, std::vector<double>(l, 0.0));
    std::vector<double> b(l, 0.0);
    for (const auto& sample : samples) {
        if (sample.s.size() != l)
            detail::throw_size_mismatch("fit_linear", sample.s.size(), l);
        for (std::size_t i = 0; i < l; ++i) {
            b[i] += sample.s[i] * sample.r;
            for (std::size_t j = i; j < l; ++j) a[i][j] += sample.s[i] * sample.s[j];
        }
    }
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < i; ++j) a[i][j] = a[j][i];
    return solve_spd(std::move(a), std::move(b));
}

std::array<double, 4> fit_rank_polynomial(const std::vector<double>& raw_weights) {
    const std::size_t l = raw_weights.size();
    if (l < 4)
        throw std::invalid_argument("fit_rank_polynomial: need at least four ranks for a cubic");
    // least squares on the Vandermonde system in r = i/l, highest degree first
    std::vector<std::vector<double>> a(4, std::vector<double>(4, 0.0));
    std::vector<double> b(4, 0.0);
    for (std::size_t i = 1; i <= l; ++i) {
        double r = static_cast<double>(i) / static_cast<double>(l);
        double basis[4] = {r * r * r, r * r, r, 1.0};
        for (int p = 0; p < 4; ++p) {
            b[p] += basis[p] * raw_weights[i - 1];
            for (int q = 0; q < 4; ++q) a[p][q] += basis[p] * basis[q];
        }
    }
    std::vector<double> w = solve_spd(std::move(a), std::move(b));
    return {w[0], w[1], w[2], w[3]};
}

double estimate_theta(const std::vector<RegressionSample>& samples,
                      const std::vector<double>& weights) {
    if (samples.empty()) throw std::invalid_argument("estimate_theta: no samples");
    const std::size_t l = weights.size();
    double residual_sum = 0.0, residual_sq = 0.0;
    double input_sum = 0.0;
    std::size_t input_count = 0;
    for (const auto& sample : samples) {
        if (sample.s.size() != l)
            detail::throw_size_mismatch("estimate_theta", sample.s.size(), l);
        double pred = 0.0;
        for (std::size_t i = 0; i < l; ++i) {
            pred += weights[i] * sample.s[i];
            input_sum += sample.s[i];
        }
        input_count += l;
        double res = pred - sample.r;
        residual_sum += res;
        residual_sq += res * res;
    }
    double n = static_cast<double>(samples.size());
    double mean_res = residual_sum / n;
    double var = (n > 1) ? (residual_sq - n * mean_res * mean_res) / (n - 1.0) : 0.0;
    double sd = std::sqrt(std::max(var, 0.0));
    double mean_input = input_sum / static_cast<double>(input_count);
    if (mean_input == 0.0)
        throw std::invalid_argument("estimate_theta: zero mean input, scale undefined");
    return sd / mean_input;
}

namespace {

FitResult finish_fit(const std::vector<RegressionSample>& samples, std::vector<double> weights) {
    FitResult result;
    result.sample_count = samples.size();
    result.theta = estimate_theta(samples, weights);
    double sq = 0.0;
    for (const auto& sample : samples) {
        double pred = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) pred += weights[i] * sample.s[i];
        sq += (pred - sample.r) * (pred - sample.r);
    }
    result.residual_norm = std::sqrt(sq);
    result.poly = fit_rank_polynomial(weights);
    result.raw_weights = std::move(weights);
    return result;
}

}  // namespace

FitResult distill_fit(const std::vector<llm::InteractionRecord>& records,
                      bool sample_every_offspring) {
    auto samples = extract_samples(records, sample_every_offspring);
    return finish_fit(samples, fit_linear(samples));
}

FitResult distill_fit_per_call(const std::vector<llm::InteractionRecord>& records) {
    std::vector<double> mean_weights;
    std::size_t fitted = 0;
    for (const auto& rec : records) {
        if (rec.offspring.empty()) continue;
        auto samples = extract_samples({rec}, false);
        auto w = fit_linear(samples);
        if (mean_weights.empty()) mean_weights.assign(w.size(), 0.0);
        for (std::size_t i = 0; i < w.size(); ++i) mean_weights[i] += w[i];
        ++fitted;
    }
    if (fitted == 0) throw std::invalid_argument("distill_fit_per_call: no usable records");
    for (double& v : mean_weights) v /= static_cast<double>(fitted);
    auto samples = extract_samples(records, false);
    return finish_fit(samples, std::move(mean_weights));
}

ops::LoWeights to_operator(const FitResult& fit, double dim_prob) {
    ops::LoWeights w;
    w.a = fit.poly[0];
    w.b = fit.poly[1];
    w.c = fit.poly[2];
    w.d = fit.poly[3];
    w.theta = fit.theta;
    w.dim_prob = dim_prob;
    w.l = static_cast<int>(fit.raw_weights.size());
    return w;
}

std::string fit_report(const FitResult& fit) {
    std::ostringstream out;
    out << "samples: " << fit.sample_count << "\n";
    out << "inputs per sample (l): " << fit.raw_weights.size() << "\n";
    out << "residual norm: " << io::format_double(fit.residual_norm) << "\n";
    out << "theta: " << io::format_double(fit.theta) << "\n";
    out << "rank weights (best first):\n";
    for (std::size_t i = 0; i < fit.raw_weights.size(); ++i)
        out << "  rank " << (i + 1) << ": " << io::format_double(fit.raw_weights[i]) << "\n";
    out << "cubic over normalized rank: a=" << io::format_double(fit.poly[0])
        << " b=" << io::format_double(fit.poly[1]) << " c=" << io::format_double(fit.poly[2])
        << " d=" << io::format_double(fit.poly[3]) << "\n";
    return out.str();
}

}  // namespace moea::fit
