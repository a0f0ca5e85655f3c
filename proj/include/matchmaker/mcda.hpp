#pragma once

/// @file mcda.hpp
/// @brief Decision matrices, SAW and TOPSIS scoring, competition ranking.

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchmaker {

class DecisionMatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Applicants x criteria grid of benefit scores plus one weight per criterion.
class DecisionMatrix {
public:
    /// Validates shape, weights (non-negative, summing to 1 within 1e-9)
    /// and scores (non-negative, at least one nonzero per column).
    DecisionMatrix(std::vector<std::string> applicant_ids, std::vector<std::string> criteria,
                   std::vector<std::vector<double>> scores, std::vector<double> weights);

    [[nodiscard]] std::size_t rows() const { return applicant_ids_.size(); }
    [[nodiscard]] std::size_t cols() const { return criteria_.size(); }
    [[nodiscard]] double at(std::size_t row, std::size_t col) const { return scores_[row][col]; }

    [[nodiscard]] const std::vector<std::string>& applicant_ids() const { return applicant_ids_; }
    [[nodiscard]] const std::vector<std::string>& criteria() const { return criteria_; }
    [[nodiscard]] const std::vector<std::vector<double>>& scores() const { return scores_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<std::string> applicant_ids_;
    std::vector<std::string> criteria_;
    std::vector<std::vector<double>> scores_;
    std::vector<double> weights_;
};

/// Weights used by the selection officer for Sub1..Sub6.
inline const std::vector<double> kDefaultSixCriteriaWeights{0.20, 0.20, 0.15, 0.15, 0.15, 0.15};

enum class Method { AMM, SAW, TOPSIS };

[[nodiscard]] std::string_view method_name(Method method);

struct RankedEntry {
    std::string applicant_id;
    double score = 0.0;
    int rank = 0;
};

/// Entries keep input order; `rank` carries the position.
struct ScoredRanking {
    Method method = Method::AMM;
    std::vector<RankedEntry> entries;

    [[nodiscard]] const RankedEntry* find(std::string_view applicant_id) const;
};

/// "1224" ranking on descending score: ties share the smallest rank and
/// the next distinct score takes its 1-based position. Scores tie only on
/// exact equality.
[[nodiscard]] std::vector<int> competition_ranks(std::span<const double> scores);

[[nodiscard]] ScoredRanking make_ranking(Method method, const std::vector<std::string>& ids,
                                         std::span<const double> scores);

/// Weighted sum of max-normalized scores.
[[nodiscard]] ScoredRanking saw_scores(const DecisionMatrix& matrix);

/// Relative closeness to the ideal solution with vector normalization and
/// Euclidean distances. Throws DecisionMatrixError when a row is equidistant
/// at zero from both ideals.
[[nodiscard]] ScoredRanking topsis_scores(const DecisionMatrix& matrix);

}  // namespace matchmaker
