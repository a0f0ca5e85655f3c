#pragma once

/// @file match.hpp
/// @brief Similarity between a requisite profile and a skills profile.
///
/// Both profiles are preprocessed first. Each derived requisite constraint
/// is paired by attribute with the derived skills constraint of the same
/// name, and the profile score is the product of the per-constraint
/// factors. Skills constraints without a requisite counterpart do not
/// contribute.

#include "matchmaker/model.hpp"
#include "matchmaker/preprocess.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace matchmaker {

/// 1 - |x - y| / (1 + x + y). Throws std::domain_error on negative input.
[[nodiscard]] double value_similarity(double x, double y);

/// 1 when the applicant value satisfies the non-numeric requisite, else 0.
[[nodiscard]] double nonnumeric_similarity(const AttributeValue& applicant,
                                           const AttributeValue& requirement);

enum class Disposition { ExactMatch, HardMismatch, SoftMismatch, MissingCounterpart };

[[nodiscard]] std::string_view disposition_name(Disposition disposition);

struct ConstraintMatch {
    AttributeName attribute;
    AttributeValue requirement_value;
    std::optional<AttributeValue> applicant_value;
    double raw_similarity = 0.0;
    double applied_factor = 0.0;
    Disposition disposition = Disposition::ExactMatch;
};

/// Scores one requisite constraint against its counterpart, if any.
///
/// A mismatch on a hard requisite contributes s^p; on a soft requisite
/// ((1 + s) / 2)^p, where s is the raw similarity and p the priority.
[[nodiscard]] ConstraintMatch constraint_similarity(const Constraint& requirement,
                                                    const Constraint* applicant);

struct MatchReport {
    double score = 1.0;
    std::vector<ConstraintMatch> factors;
    std::vector<CategoryTrace> traces;
};

[[nodiscard]] MatchReport profile_similarity(const Profile& requirement, const Profile& skills);

}  // namespace matchmaker
