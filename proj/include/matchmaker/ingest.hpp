#pragma once

/// @file ingest.hpp
/// @brief Cohort CSV loading, column-to-attribute mapping, and the
/// eligibility rule applied by admissions officers.
///
/// Cohort CSV: comma-separated, header row first, applicant id in the first
/// column. `Total`, `Rank` and `Selected` columns (any case) are read as
/// annotations; every other column is a numeric mark.
///
/// Mapping file: `key = value` lines, `#` comments.
///
///     id_column = Applicant
///     requirement_profile = six_subject_requirement.profile
///     column.Sub1 = Mathematics
///
/// A relative profile path is resolved against the mapping file's directory.

#include "matchmaker/mcda.hpp"
#include "matchmaker/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchmaker {

class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CohortRow {
    std::string applicant_id;
    std::vector<double> marks;
    std::optional<double> total;
    std::optional<int> rank;
    std::optional<bool> selected;
};

struct CohortTable {
    std::string id_column;
    std::vector<std::string> header;  ///< mark columns only
    std::vector<CohortRow> rows;
    std::vector<std::string> warnings;

    [[nodiscard]] bool has_ranks() const;
    [[nodiscard]] std::optional<std::size_t> column_index(std::string_view name) const;
};

[[nodiscard]] CohortTable parse_cohort(std::string_view csv);

/// Throws IngestError on missing file, ragged rows, duplicate ids or
/// non-numeric marks.
[[nodiscard]] CohortTable load_cohort(const std::string& path);

struct MappingEntry {
    std::string column;
    std::string attribute;
};

struct AttributeMapping {
    std::string id_column;
    std::vector<MappingEntry> entries;
    std::string requirement_profile_path;

    [[nodiscard]] const MappingEntry* for_column(std::string_view column) const;
};

/// `base_dir` resolves a relative `requirement_profile`.
[[nodiscard]] AttributeMapping parse_mapping(std::string_view text, const std::string& base_dir = "");
[[nodiscard]] AttributeMapping load_mapping(const std::string& path);

/// Every mapped attribute must name a requisite constraint or category member.
void check_mapping(const AttributeMapping& mapping, const Profile& requirement);

/// One hard, priority-1 Number constraint per mapped column. Unmapped
/// columns are skipped and reported through `warnings` when given.
[[nodiscard]] Profile build_skills_profile(const CohortTable& cohort, std::size_t row,
                                           const AttributeMapping& mapping,
                                           std::vector<std::string>* warnings = nullptr);

/// Rows in cohort order, one criterion per mark column.
[[nodiscard]] DecisionMatrix build_decision_matrix(const CohortTable& cohort,
                                                   const std::vector<double>& weights);

struct SelectionOutcome {
    std::string applicant_id;
    double total = 0.0;
    bool eligible = false;
    /// Unmet members of categories that require every member, plus unmet
    /// uncategorized requisites.
    std::vector<std::string> failed_compulsory;
    /// Categories whose satisfied count falls below the required count.
    std::vector<std::string> short_categories;
};

/// Eligible iff every category reaches its required count and every
/// mapped uncategorized requisite is met. Throws IngestError when the
/// requisite profile has no `::count` constraints.
[[nodiscard]] std::vector<SelectionOutcome> select_applicants(const CohortTable& cohort,
                                                              const Profile& requirement,
                                                              const AttributeMapping& mapping);

/// Comma-separated reals, e.g. "0.2,0.2,0.15,0.15,0.15,0.15".
[[nodiscard]] std::vector<double> parse_weights(std::string_view text);

}  // namespace matchmaker
