#pragma once

/// @file preprocess.hpp
/// @brief Collapses each composite category of a requisite profile into a
/// single target constraint on both the requisite and the skills side.
///
/// For a category with required count S over M requisite members, the
/// requisite target is
///
///     Pcc = (S / M) * sum(x_i)                      numeric members
///     Pcc = S / M                                   non-numeric members
///
/// and, with N applicant constraints extracted for the category of which T
/// satisfy their requisite counterpart,
///
///     Pac = (min(S, T) / max(S, N)) * sum(y_j)      numeric members
///     Pac = min(S, T) / max(S, N)                   non-numeric members
///
/// Every extracted value enters sum(y_j), satisfied or not. A range
/// contributes its upper bound.

#include "matchmaker/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace matchmaker {

/// Raised when a requisite profile cannot be preprocessed.
class PreprocessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CategoryTrace {
    std::string category;
    long long required = 0;   ///< S
    long long members = 0;    ///< M
    long long satisfied = 0;  ///< T
    long long extracted_count = 0;  ///< N
    double requirement_target = 0.0;  ///< Pcc
    double applicant_target = 0.0;    ///< Pac
    bool numeric = true;
    std::vector<AttributeName> extracted;

    friend bool operator==(const CategoryTrace&, const CategoryTrace&) = default;
};

struct PreprocessResult {
    Profile derived_requirement;  ///< P*c
    Profile derived_skills;       ///< P*a
    std::vector<CategoryTrace> traces;

    friend bool operator==(const PreprocessResult&, const PreprocessResult&) = default;
};

/// Number -> value, Range -> upper bound, anything else -> nullopt.
[[nodiscard]] std::optional<double> representative_value(const AttributeValue& value);

/// Whether an applicant value meets a requisite value.
[[nodiscard]] bool satisfies(const AttributeValue& applicant, const AttributeValue& requirement);

/// Pcc for `required` (S) of `members`. Throws PreprocessError when S is
/// outside 1..M or the members mix numeric and non-numeric values.
[[nodiscard]] double requirement_target(long long required, const std::vector<Constraint>& members);

struct ApplicantTarget {
    double value = 0.0;  ///< Pac
    long long satisfied = 0;
    long long extracted_count = 0;
    std::vector<AttributeName> extracted;
};

/// Pac for one category. Applicant constraints are matched to members by
/// unscoped name; applicant-side `::count` constraints are ignored.
[[nodiscard]] ApplicantTarget applicant_target(long long required,
                                               const std::vector<Constraint>& members,
                                               const Profile& applicant);

/// Builds P*c and P*a. Inputs are not modified.
[[nodiscard]] PreprocessResult preprocess_pair(const Profile& requirement, const Profile& skills);

}  // namespace matchmaker
