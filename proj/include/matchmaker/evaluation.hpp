#pragma once

/// @file evaluation.hpp
/// @brief Agreement between system rankings and a human ranking.

#include "matchmaker/mcda.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace matchmaker {

class EvaluationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RankVector {
    std::vector<std::string> applicant_ids;
    std::vector<int> ranks;

    [[nodiscard]] static RankVector from(const ScoredRanking& ranking);
};

/// Critical F for the regression test over the 25-applicant cohort.
inline constexpr double kCriticalF = 3.420;

struct CorrelationReport {
    std::string method;
    double r = 0.0;
    double f = 0.0;  ///< +inf when |r| == 1
    int n = 0;
    double critical_f = kCriticalF;
    bool significant = false;
};

/// Pearson correlation of the two rank vectors, paired by applicant id.
/// Throws EvaluationError when the id sets differ or either vector is constant.
[[nodiscard]] double rank_correlation(const RankVector& a, const RankVector& b);

/// F statistic of a simple regression: r^2 (n - 2) / (1 - r^2).
/// Throws EvaluationError for |r| >= 1 or n < 3.
[[nodiscard]] double regression_f(double r, int n);

/// One report per system. A perfect correlation has infinite F and is
/// reported significant.
[[nodiscard]] std::vector<CorrelationReport> compare_methods(const RankVector& human,
                                                             const std::vector<ScoredRanking>& systems,
                                                             double critical_f = kCriticalF);

}  // namespace matchmaker
