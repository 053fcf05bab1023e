#pragma once

#include <span>

namespace moea::stats {

double mean(std::span<const double> xs);

/// Sample standard deviation (n - 1 divisor); 0 for fewer than two values.
double stddev(std::span<const double> xs);

struct RankSum {
    double statistic = 0.0;  // rank sum of the first sample, midranks on ties
    double p_value = 1.0;    // two-sided
    bool exact = false;      // exact permutation enumeration vs normal approximation
};

/// Two-sided Wilcoxon rank-sum test. Small pooled sizes are enumerated
/// exactly (deviation-from-mean tail definition, valid under ties); larger
/// ones use the normal approximation with tie correction and continuity
/// correction.
RankSum rank_sum_test(std::span<const double> a, std::span<const double> b);

/// '+' when candidate is significantly better than reference at `alpha`,
/// '-' when significantly worse, '=' otherwise.
char significance_mark(std::span<const double> candidate, std::span<const double> reference,
                       bool lower_is_better, double alpha = 0.05);

}  // namespace moea::stats
