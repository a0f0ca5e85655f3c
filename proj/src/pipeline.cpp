#include "matchmaker/pipeline.hpp"

#include "matchmaker/profile_dsl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace matchmaker {

ScoredRanking amm_ranking(const CohortTable& cohort, const Profile& requirement,
                          const AttributeMapping& mapping, std::vector<MatchReport>* reports) {
    std::vector<std::string> ids;
    std::vector<double> scores;
    for (std::size_t i = 0; i < cohort.rows.size(); ++i) {
        auto report = profile_similarity(requirement, build_skills_profile(cohort, i, mapping));
        ids.push_back(cohort.rows[i].applicant_id);
        scores.push_back(report.score);
        if (reports) reports->push_back(std::move(report));
    }
    return make_ranking(Method::AMM, ids, scores);
}

std::vector<double> resolve_weights(const CohortTable& cohort,
                                    const std::optional<std::vector<double>>& weights) {
    if (weights) return *weights;
    if (cohort.header.size() == kDefaultSixCriteriaWeights.size()) return kDefaultSixCriteriaWeights;
    throw IngestError(fmt::format("cohort has {} criteria; --weights is required", cohort.header.size()));
}

CohortEvaluation evaluate_cohort(const CohortTable& cohort, const Profile& requirement,
                                 const AttributeMapping& mapping, const std::vector<double>& weights) {
    if (!cohort.has_ranks()) throw IngestError("cohort has no human Rank column");

    CohortEvaluation out;
    const auto matrix = build_decision_matrix(cohort, weights);
    out.amm = amm_ranking(cohort, requirement, mapping);
    out.saw = saw_scores(matrix);
    out.topsis = topsis_scores(matrix);
    out.selection = select_applicants(cohort, requirement, mapping);
    for (const auto& row : cohort.rows) {
        out.human.applicant_ids.push_back(row.applicant_id);
        out.human.ranks.push_back(*row.rank);
    }
    out.correlations = compare_methods(out.human, {out.amm, out.saw, out.topsis});
    return out;
}

PublishedTable load_published_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFileError("cannot open published table '" + path + "'");
    PublishedTable out;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream cells(line);
        std::string id;
        std::string cell;
        std::vector<double> values;
        std::getline(cells, id, ',');
        while (std::getline(cells, cell, ',')) values.push_back(std::stod(cell));
        if (values.size() != 6) throw IngestError("published table row '" + id + "' needs 6 values");
        out[id] = {values[0], static_cast<int>(values[1]), values[2], static_cast<int>(values[3]),
                   values[4], static_cast<int>(values[5])};
    }
    return out;
}

FixturePaths FixturePaths::in(const std::string& data_dir) {
    const std::filesystem::path dir(data_dir);
    return {(dir / "table1_cohort.csv").string(), (dir / "table1_mapping.cfg").string(),
            (dir / "table2_published.csv").string(), (dir / "textbox3_requirement.profile").string(),
            (dir / "textbox4_skills.profile").string()};
}

namespace {

constexpr double kScoreTolerance = 5e-5;
constexpr double kCorrelationTolerance = 0.01;
constexpr double kTopsisRankAgreement = 0.99;

struct PublishedCorrelation {
    Method method;
    double r;
};
constexpr PublishedCorrelation kPublishedCorrelations[] = {
    {Method::AMM, 0.878}, {Method::SAW, 0.259}, {Method::TOPSIS, 0.133}};

CheckResult score_check(std::string name, const ScoredRanking& ranking, const PublishedTable& published,
                        double PublishedRow::*column) {
    std::vector<std::string> misses;
    double worst = 0.0;
    for (const auto& e : ranking.entries) {
        const auto it = published.find(e.applicant_id);
        if (it == published.end()) {
            misses.push_back(e.applicant_id + " (not published)");
            continue;
        }
        const double diff = std::abs(e.score - it->second.*column);
        worst = std::max(worst, diff);
        if (diff > kScoreTolerance) {
            misses.push_back(fmt::format("{} {:.5f} vs {:.5f}", e.applicant_id, e.score, it->second.*column));
        }
    }
    if (misses.empty()) return {std::move(name), true, fmt::format("max deviation {:.2e}", worst)};
    return {std::move(name), false, fmt::format("{} outside 5e-5: {}", misses.size(), fmt::join(misses, "; "))};
}

CheckResult rank_check(std::string name, const ScoredRanking& ranking, const PublishedTable& published,
                       int PublishedRow::*column) {
    std::vector<std::string> misses;
    for (const auto& e : ranking.entries) {
        const auto it = published.find(e.applicant_id);
        const int expected = it == published.end() ? 0 : it->second.*column;
        if (e.rank != expected) misses.push_back(fmt::format("{} rank {} vs {}", e.applicant_id, e.rank, expected));
    }
    if (misses.empty()) return {std::move(name), true, "all ranks equal"};
    return {std::move(name), false, fmt::format("{} differ: {}", misses.size(), fmt::join(misses, "; "))};
}

template <typename F>
CheckResult guarded(std::string name, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("error: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_reproduction_checks(const FixturePaths& paths,
                                                 const std::optional<std::vector<double>>& weights) {
    std::vector<CheckResult> checks;

    CohortTable cohort;
    AttributeMapping mapping;
    Profile requirement;
    PublishedTable published;
    std::optional<CohortEvaluation> eval;
    try {
        cohort = load_cohort(paths.cohort);
        mapping = load_mapping(paths.mapping);
        requirement = load_profile_file(mapping.requirement_profile_path, ProfileRole::Requirement).profile;
        check_mapping(mapping, requirement);
        published = load_published_table(paths.published);
        eval = evaluate_cohort(cohort, requirement, mapping, resolve_weights(cohort, weights));
    } catch (const std::exception& e) {
        checks.push_back({"fixtures", false, e.what()});
    }

    if (eval) {
        checks.push_back(score_check("amm-scores", eval->amm, published, &PublishedRow::amm));
        checks.push_back(rank_check("amm-ranks", eval->amm, published, &PublishedRow::amm_rank));
        checks.push_back(score_check("saw-scores", eval->saw, published, &PublishedRow::saw));

        checks.push_back(guarded("topsis-ranks", [&]() -> CheckResult {
            RankVector expected;
            for (const auto& e : eval->topsis.entries) {
                expected.applicant_ids.push_back(e.applicant_id);
                expected.ranks.push_back(published.at(e.applicant_id).topsis_rank);
            }
            const double agreement = rank_correlation(RankVector::from(eval->topsis), expected);
            const auto* last = eval->topsis.find("025");
            const bool ok = agreement >= kTopsisRankAgreement && last && last->rank == 25;
            double worst = 0.0;
            for (const auto& e : eval->topsis.entries) {
                worst = std::max(worst, std::abs(e.score - published.at(e.applicant_id).topsis));
            }
            return {"topsis-ranks", ok,
                    fmt::format("rank agreement {:.5f}; 025 rank {}; value deviation {:.2e} (not gated)",
                                agreement, last ? last->rank : 0, worst)};
        }));

        checks.push_back(guarded("eligibility", [&]() -> CheckResult {
            std::set<std::string> rejected;
            std::set<std::string> expected;
            for (const auto& s : eval->selection) {
                if (!s.eligible) rejected.insert(s.applicant_id);
            }
            for (const auto& row : cohort.rows) {
                if (row.selected && !*row.selected) expected.insert(row.applicant_id);
            }
            const auto eligible = eval->selection.size() - rejected.size();
            const bool ok = rejected == expected && eligible == 20;
            return {"eligibility", ok,
                    fmt::format("{} eligible; rejected {{{}}}", eligible, fmt::join(rejected, ", "))};
        }));

        for (const auto& published_r : kPublishedCorrelations) {
            const auto name = fmt::format("correlation-{}", method_name(published_r.method));
            checks.push_back(guarded(name, [&]() -> CheckResult {
                const auto it = std::find_if(eval->correlations.begin(), eval->correlations.end(),
                                             [&](const CorrelationReport& c) {
                                                 return c.method == method_name(published_r.method);
                                             });
                const bool ok = std::abs(it->r - published_r.r) <= kCorrelationTolerance;
                return {name, ok, fmt::format("r = {:.5f} (published {:.3f}), F = {:.5f}", it->r,
                                              published_r.r, it->f)};
            }));
        }

        checks.push_back(guarded("f-statistics", [&]() -> CheckResult {
            bool consistent = true;
            std::vector<std::string> significant;
            for (const auto& c : eval->correlations) {
                if (std::abs(c.r) < 1.0 && std::abs(c.f - c.r * c.r * 23.0 / (1.0 - c.r * c.r)) > 1e-6) {
                    consistent = false;
                }
                if (c.significant) significant.push_back(c.method);
            }
            const bool ok = consistent && significant == std::vector<std::string>{"AMM"};
            return {"f-statistics", ok,
                    fmt::format("F derived from r: {}; significant vs {:.3f}: {{{}}}",
                                consistent ? "yes" : "no", kCriticalF, fmt::join(significant, ", "))};
        }));
    }

    checks.push_back(guarded("worked-example", [&]() -> CheckResult {
        const auto req = load_profile_file(paths.textbox_requirement, ProfileRole::Requirement).profile;
        const auto skills = load_profile_file(paths.textbox_skills, ProfileRole::Skills).profile;
        const auto result = preprocess_pair(req, skills);
        const auto trace = std::find_if(result.traces.begin(), result.traces.end(),
                                        [](const CategoryTrace& t) { return t.category == "Optional_Subject"; });
        if (trace == result.traces.end()) return {"worked-example", false, "no Optional_Subject trace"};
        const bool life_sciences_excluded =
            std::none_of(trace->extracted.begin(), trace->extracted.end(),
                         [](const AttributeName& a) { return equals_ignore_case(a.name(), "Life_Sciences"); });
        const bool ok = trace->required == 3 && trace->members == 9 && trace->satisfied == 5 &&
                        trace->extracted_count == 5 && life_sciences_excluded;
        return {"worked-example", ok,
                fmt::format("S={} M={} T={} N={} Pac={:.5f}; Life_Sciences {}", trace->required,
                            trace->members, trace->satisfied, trace->extracted_count,
                            trace->applicant_target, life_sciences_excluded ? "excluded" : "INCLUDED")};
    }));

    return checks;
}

}  // namespace matchmaker
