#include "matchmaker/mcda.hpp"

#include <algorithm>
#include <cmath>

namespace matchmaker {

DecisionMatrix::DecisionMatrix(std::vector<std::string> applicant_ids,
                               std::vector<std::string> criteria,
                               std::vector<std::vector<double>> scores,
                               std::vector<double> weights)
    : applicant_ids_(std::move(applicant_ids)),
      criteria_(std::move(criteria)),
      scores_(std::move(scores)),
      weights_(std::move(weights)) {
    if (applicant_ids_.empty()) throw DecisionMatrixError("decision matrix has no rows");
    if (criteria_.empty()) throw DecisionMatrixError("decision matrix has no criteria");
    if (scores_.size() != applicant_ids_.size()) {
        throw DecisionMatrixError("score rows do not match applicant count");
    }
    if (weights_.size() != criteria_.size()) {
        throw DecisionMatrixError("expected " + std::to_string(criteria_.size()) + " weights, got " +
                                  std::to_string(weights_.size()));
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) throw DecisionMatrixError("weights must be non-negative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw DecisionMatrixError("weights must sum to 1");

    std::vector<bool> nonzero(criteria_.size(), false);
    for (const auto& row : scores_) {
        if (row.size() != criteria_.size()) throw DecisionMatrixError("ragged score row");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!(row[j] >= 0.0)) throw DecisionMatrixError("scores must be non-negative");
            if (row[j] > 0.0) nonzero[j] = true;
        }
    }
    for (std::size_t j = 0; j < nonzero.size(); ++j) {
        if (!nonzero[j]) throw DecisionMatrixError("criterion '" + criteria_[j] + "' is all zero");
    }
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::AMM: return "AMM";
        case Method::SAW: return "SAW";
        case Method::TOPSIS: return "TOPSIS";
    }
    return "unknown";
}

const RankedEntry* ScoredRanking::find(std::string_view applicant_id) const {
    for (const auto& e : entries) {
        if (e.applicant_id == applicant_id) return &e;
    }
    return nullptr;
}

std::vector<int> competition_ranks(std::span<const double> scores) {
    std::vector<int> ranks(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const auto better = std::count_if(scores.begin(), scores.end(),
                                          [&](double other) { return other > scores[i]; });
        ranks[i] = static_cast<int>(better) + 1;
    }
    return ranks;
}

ScoredRanking make_ranking(Method method, const std::vector<std::string>& ids,
                           std::span<const double> scores) {
    if (ids.size() != scores.size()) throw std::invalid_argument("ids and scores differ in length");
    const auto ranks = competition_ranks(scores);
    ScoredRanking out{method, {}};
    out.entries.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out.entries.push_back({ids[i], scores[i], ranks[i]});
    return out;
}

ScoredRanking saw_scores(const DecisionMatrix& m) {
    std::vector<double> column_max(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) column_max[j] = std::max(column_max[j], m.at(i, j));
    }

    std::vector<double> scores(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            scores[i] += m.weights()[j] * (m.at(i, j) / column_max[j]);
        }
    }
    return make_ranking(Method::SAW, m.applicant_ids(), scores);
}

ScoredRanking topsis_scores(const DecisionMatrix& m) {
    const auto rows = m.rows();
    const auto cols = m.cols();

    std::vector<double> norm(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) norm[j] += m.at(i, j) * m.at(i, j);
    }
    for (auto& n : norm) n = std::sqrt(n);

    std::vector<std::vector<double>> weighted(rows, std::vector<double>(cols));
    std::vector<double> best(cols, 0.0);
    std::vector<double> worst(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            weighted[i][j] = m.weights()[j] * m.at(i, j) / norm[j];
        }
        const auto [lo, hi] = std::minmax_element(
            weighted.begin(), weighted.end(),
            [j](const auto& a, const auto& b) { return a[j] < b[j]; });
        worst[j] = (*lo)[j];
        best[j] = (*hi)[j];
    }

    std::vector<double> closeness(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        double to_best = 0.0;
        double to_worst = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            to_best += (weighted[i][j] - best[j]) * (weighted[i][j] - best[j]);
            to_worst += (weighted[i][j] - worst[j]) * (weighted[i][j] - worst[j]);
        }
        to_best = std::sqrt(to_best);
        to_worst = std::sqrt(to_worst);
        if (to_best + to_worst == 0.0) {
            throw DecisionMatrixError("applicant '" + m.applicant_ids()[i] +
                                      "' coincides with both ideals; closeness undefined");
        }
        closeness[i] = to_worst / (to_best + to_worst);
    }
    return make_ranking(Method::TOPSIS, m.applicant_ids(), closeness);
}

}  // namespace matchmaker
