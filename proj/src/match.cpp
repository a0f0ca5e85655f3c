#include "matchmaker/match.hpp"

#include <cmath>
#include <string>

namespace matchmaker {

double value_similarity(double x, double y) {
    if (!(x >= 0.0) || !(y >= 0.0)) {
        throw std::domain_error("similarity is defined for non-negative values only");
    }
    return 1.0 - std::abs(x - y) / (1.0 + (x + y));
}

double nonnumeric_similarity(const AttributeValue& applicant, const AttributeValue& requirement) {
    return satisfies(applicant, requirement) ? 1.0 : 0.0;
}

std::string_view disposition_name(Disposition disposition) {
    switch (disposition) {
        case Disposition::ExactMatch: return "exact";
        case Disposition::HardMismatch: return "hard-mismatch";
        case Disposition::SoftMismatch: return "soft-mismatch";
        case Disposition::MissingCounterpart: return "missing";
    }
    return "unknown";
}

namespace {

std::optional<double> requirement_magnitude(const AttributeValue& value) {
    if (auto rep = representative_value(value)) return rep;
    if (const auto* a = std::get_if<AtLeast>(&value)) return static_cast<double>(a->n);
    return std::nullopt;
}

double raw_similarity(const AttributeValue& requirement, const AttributeValue* applicant) {
    if (const auto target = requirement_magnitude(requirement)) {
        if (applicant == nullptr) return value_similarity(0.0, *target);
        if (satisfies(*applicant, requirement)) return 1.0;
        return value_similarity(representative_value(*applicant).value_or(0.0), *target);
    }
    if (applicant == nullptr) return 0.0;
    return nonnumeric_similarity(*applicant, requirement);
}

}  // namespace

ConstraintMatch constraint_similarity(const Constraint& requirement, const Constraint* applicant) {
    ConstraintMatch out;
    out.attribute = requirement.attribute;
    out.requirement_value = requirement.value;
    if (applicant) out.applicant_value = applicant->value;

    const double s = raw_similarity(requirement.value, applicant ? &applicant->value : nullptr);
    out.raw_similarity = s;

    if (s == 1.0) {
        out.applied_factor = 1.0;
        out.disposition = applicant ? Disposition::ExactMatch : Disposition::MissingCounterpart;
        return out;
    }

    const double base = requirement.flexibility == Flexibility::Hard ? s : (1.0 + s) / 2.0;
    out.applied_factor = std::pow(base, requirement.priority);
    if (!applicant) {
        out.disposition = Disposition::MissingCounterpart;
    } else {
        out.disposition = requirement.flexibility == Flexibility::Hard ? Disposition::HardMismatch
                                                                       : Disposition::SoftMismatch;
    }
    return out;
}

MatchReport profile_similarity(const Profile& requirement, const Profile& skills) {
    auto derived = preprocess_pair(requirement, skills);

    MatchReport report;
    for (const auto& wanted : derived.derived_requirement.constraints) {
        const Constraint* offered = derived.derived_skills.find(wanted.attribute);
        auto match = constraint_similarity(wanted, offered);
        report.score *= match.applied_factor;
        report.factors.push_back(std::move(match));
    }
    report.traces = std::move(derived.traces);
    return report;
}

}  // namespace matchmaker
