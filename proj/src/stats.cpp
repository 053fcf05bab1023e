#include "moea/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace moea::stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    double mu = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

namespace {

/// Midranks of the pooled sample; the first n1 entries belong to a.
std::vector<double> pooled_midranks(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() + b.size();
    std::vector<std::pair<double, std::size_t>> pooled(n);
    for (std::size_t i = 0; i < a.size(); ++i) pooled[i] = {a[i], i};
    for (std::size_t i = 0; i < b.size(); ++i) pooled[a.size() + i] = {b[i], a.size() + i};
    std::sort(pooled.begin(), pooled.end());
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[j + 1].first == pooled[i].first) ++j;
        double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[pooled[k].second] = midrank;
        i = j + 1;
    }
    return ranks;
}

long long combinations(std::size_t n, std::size_t k) {
    long long c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<long long>(n - k + i) / i;
    return c;
}

/// Counts size-k subsets of `ranks` whose sum deviates from mu by at
/// least `threshold`.
void count_extreme(const std::vector<double>& ranks, std::size_t start, std::size_t remaining,
                   double sum, double mu, double threshold, long long& hits) {
    if (remaining == 0) {
        if (std::abs(sum - mu) >= threshold) ++hits;
        return;
    }
    if (ranks.size() - start < remaining) return;
    count_extreme(ranks, start + 1, remaining - 1, sum + ranks[start], mu, threshold, hits);
    count_extreme(ranks, start + 1, remaining, sum, mu, threshold, hits);
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

RankSum rank_sum_test(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("rank_sum_test: both samples must be nonempty");
    const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
    std::vector<double> ranks = pooled_midranks(a, b);
    double w = 0.0;
    for (std::size_t i = 0; i < n1; ++i) w += ranks[i];
    const double mu = static_cast<double>(n1) * (n + 1) / 2.0;

    RankSum result;
    result.statistic = w;

    if (n <= 22) {
        // exact permutation distribution; two-sided deviation tail, valid
        // under ties
        long long hits = 0;
        double threshold = std::abs(w - mu) - 1e-9;
        count_extreme(ranks, 0, n1, 0.0, mu, std::max(threshold, 0.0), hits);
        result.p_value = static_cast<double>(hits) / static_cast<double>(combinations(n, n1));
        result.exact = true;
        return result;
    }

    double tie_term = 0.0;
    std::vector<double> sorted(ranks);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    double var = static_cast<double>(n1) * n2 / 12.0 *
                 ((n + 1) - tie_term / (static_cast<double>(n) * (n - 1)));
    if (var <= 0.0) {
        result.p_value = 1.0;
        return result;
    }
    double diff = w - mu;
    double corrected = std::abs(diff) > 0.5 ? std::abs(diff) - 0.5 : 0.0;
    result.p_value = std::min(1.0, 2.0 * normal_sf(corrected / std::sqrt(var)));
    return result;
}

char significance_mark(std::span<const double> candidate, std::span<const double> reference,
                       bool lower_is_better, double alpha) {
    RankSum test = rank_sum_test(candidate, reference);
    if (test.p_value >= alpha) return '=';
    double mc = mean(candidate), mr = mean(reference);
    if (mc == mr) return '=';
    bool better = lower_is_better ? (mc < mr) : (mc > mr);
    return better ? '+' : '-';
}

}  // namespace moea::stats
