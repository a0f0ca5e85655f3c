#pragma once

/// @file pipeline.hpp
/// @brief Cohort-level runs: AMM ranking, baselines, comparison against the
/// human ranking, and the reproduction checks behind `matchmaker demo`.

#include "matchmaker/evaluation.hpp"
#include "matchmaker/ingest.hpp"
#include "matchmaker/match.hpp"
#include "matchmaker/mcda.hpp"

#include <map>
#include <string>
#include <vector>

namespace matchmaker {

/// Scores every cohort row against the requisite profile. When `reports`
/// is given it receives one MatchReport per row, in cohort order.
[[nodiscard]] ScoredRanking amm_ranking(const CohortTable& cohort, const Profile& requirement,
                                        const AttributeMapping& mapping,
                                        std::vector<MatchReport>* reports = nullptr);

/// Resolves weights: explicit ones win; a six-criterion cohort falls back
/// to kDefaultSixCriteriaWeights; anything else throws IngestError.
[[nodiscard]] std::vector<double> resolve_weights(const CohortTable& cohort,
                                                  const std::optional<std::vector<double>>& weights);

struct CohortEvaluation {
    ScoredRanking amm;
    ScoredRanking saw;
    ScoredRanking topsis;
    std::vector<SelectionOutcome> selection;
    RankVector human;
    std::vector<CorrelationReport> correlations;  ///< AMM, SAW, TOPSIS
};

/// Throws IngestError when the cohort carries no human Rank column.
[[nodiscard]] CohortEvaluation evaluate_cohort(const CohortTable& cohort, const Profile& requirement,
                                               const AttributeMapping& mapping,
                                               const std::vector<double>& weights);

/// Published per-applicant scores and ranks for each method.
struct PublishedRow {
    double saw = 0.0;
    int saw_rank = 0;
    double topsis = 0.0;
    int topsis_rank = 0;
    double amm = 0.0;
    int amm_rank = 0;
};

using PublishedTable = std::map<std::string, PublishedRow>;

[[nodiscard]] PublishedTable load_published_table(const std::string& path);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Locations of the bundled fixtures.
struct FixturePaths {
    std::string cohort;
    std::string mapping;
    std::string published;
    std::string textbox_requirement;
    std::string textbox_skills;

    [[nodiscard]] static FixturePaths in(const std::string& data_dir);
};

/// Runs the full reproduction over the fixtures and grades every check.
/// Without explicit weights the six-criterion defaults apply.
[[nodiscard]] std::vector<CheckResult> run_reproduction_checks(
    const FixturePaths& paths, const std::optional<std::vector<double>>& weights = std::nullopt);

}  // namespace matchmaker
