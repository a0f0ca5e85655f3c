#include "matchmaker/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace matchmaker {

RankVector RankVector::from(const ScoredRanking& ranking) {
    RankVector out;
    for (const auto& e : ranking.entries) {
        out.applicant_ids.push_back(e.applicant_id);
        out.ranks.push_back(e.rank);
    }
    return out;
}

namespace {

std::map<std::string, int> index_by_id(const RankVector& v) {
    if (v.applicant_ids.size() != v.ranks.size()) {
        throw EvaluationError("rank vector has mismatched id and rank counts");
    }
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < v.ranks.size(); ++i) {
        if (!out.emplace(v.applicant_ids[i], v.ranks[i]).second) {
            throw EvaluationError("duplicate applicant id '" + v.applicant_ids[i] + "'");
        }
    }
    return out;
}

}  // namespace

double rank_correlation(const RankVector& a, const RankVector& b) {
    const auto left = index_by_id(a);
    const auto right = index_by_id(b);
    if (left.size() != right.size()) throw EvaluationError("rank vectors cover different applicants");

    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [id, rank] : left) {
        const auto it = right.find(id);
        if (it == right.end()) throw EvaluationError("applicant '" + id + "' missing from one ranking");
        xs.push_back(rank);
        ys.push_back(it->second);
    }

    const auto n = static_cast<double>(xs.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        syy += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    if (sxx == 0.0 || syy == 0.0) throw EvaluationError("rank vector has zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double regression_f(double r, int n) {
    if (n < 3) throw EvaluationError("F statistic needs at least 3 observations");
    if (!(std::abs(r) < 1.0)) throw EvaluationError("F statistic is unbounded for |r| = 1");
    return r * r * (n - 2) / (1.0 - r * r);
}

std::vector<CorrelationReport> compare_methods(const RankVector& human,
                                               const std::vector<ScoredRanking>& systems,
                                               double critical_f) {
    std::vector<CorrelationReport> out;
    for (const auto& system : systems) {
        CorrelationReport report;
        report.method = std::string(method_name(system.method));
        report.n = static_cast<int>(human.ranks.size());
        report.critical_f = critical_f;
        report.r = rank_correlation(human, RankVector::from(system));
        report.f = std::abs(report.r) < 1.0 ? regression_f(report.r, report.n)
                                            : std::numeric_limits<double>::infinity();
        report.significant = report.f > critical_f;
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace matchmaker
