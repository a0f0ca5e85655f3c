#include "matchmaker/preprocess.hpp"

#include <algorithm>

namespace matchmaker {

std::optional<double> representative_value(const AttributeValue& value) {
    if (const auto* n = std::get_if<Number>(&value)) return n->value;
    if (const auto* r = std::get_if<Range>(&value)) return r->hi;
    return std::nullopt;
}

bool satisfies(const AttributeValue& applicant, const AttributeValue& requirement) {
    if (const auto* y = std::get_if<Number>(&applicant)) {
        if (const auto* r = std::get_if<Range>(&requirement)) return r->lo <= y->value && y->value <= r->hi;
        if (const auto* a = std::get_if<AtLeast>(&requirement)) return y->value >= static_cast<double>(a->n);
        if (const auto* x = std::get_if<Number>(&requirement)) return y->value >= x->value;
        return false;
    }
    if (const auto* t = std::get_if<Text>(&applicant)) {
        if (const auto* set = std::get_if<TextSet>(&requirement)) return set->contains(t->value);
        if (const auto* other = std::get_if<Text>(&requirement)) return equals_ignore_case(t->value, other->value);
        return false;
    }
    if (const auto* held = std::get_if<TextSet>(&applicant)) {
        if (const auto* wanted = std::get_if<TextSet>(&requirement)) {
            return std::any_of(held->members.begin(), held->members.end(),
                               [&](const std::string& m) { return wanted->contains(m); });
        }
    }
    return false;
}

namespace {

bool all_numeric(const std::vector<Constraint>& members) {
    return std::all_of(members.begin(), members.end(),
                       [](const Constraint& c) { return is_numeric(c.value); });
}

}  // namespace

double requirement_target(long long required, const std::vector<Constraint>& members) {
    const auto m = static_cast<long long>(members.size());
    if (required < 1 || required > m) {
        throw PreprocessError("count " + std::to_string(required) + " outside 1.." + std::to_string(m));
    }
    const bool numeric = all_numeric(members);
    const bool none_numeric = std::none_of(members.begin(), members.end(),
                                           [](const Constraint& c) { return is_numeric(c.value); });
    if (!numeric && !none_numeric) {
        throw PreprocessError("category mixes numeric and non-numeric members");
    }

    const double scale = static_cast<double>(required) / static_cast<double>(m);
    if (!numeric) return scale;

    double sum = 0.0;
    for (const auto& c : members) sum += *representative_value(c.value);
    return scale * sum;
}

ApplicantTarget applicant_target(long long required, const std::vector<Constraint>& members,
                                 const Profile& applicant) {
    ApplicantTarget out;
    const bool numeric = all_numeric(members);
    double sum = 0.0;

    for (const auto& c : applicant.constraints) {
        if (c.attribute.is_count()) continue;
        const auto member = std::find_if(members.begin(), members.end(), [&](const Constraint& m) {
            return m.attribute.same_name(c.attribute);
        });
        if (member == members.end()) continue;

        ++out.extracted_count;
        out.extracted.push_back(c.attribute);
        if (satisfies(c.value, member->value)) ++out.satisfied;
        // A non-numeric applicant value in a numeric category counts as absent mass.
        if (numeric) sum += representative_value(c.value).value_or(0.0);
    }

    if (out.extracted_count == 0) return out;

    const double scale = static_cast<double>(std::min(required, out.satisfied)) /
                         static_cast<double>(std::max(required, out.extracted_count));
    out.value = numeric ? scale * sum : scale;
    return out;
}

PreprocessResult preprocess_pair(const Profile& requirement, const Profile& skills) {
    PreprocessResult out;
    out.derived_requirement.role = ProfileRole::Requirement;
    out.derived_skills.role = ProfileRole::Skills;

    std::vector<AttributeName> extracted;
    std::vector<AttributeName> targets;

    // Categories in order of first appearance; one without a `::count`
    // constraint requires every member.
    std::vector<std::string> categories;
    for (const auto& c : requirement.constraints) {
        if (!c.attribute.has_category()) continue;
        const auto& name = *c.attribute.category();
        const bool known = std::any_of(categories.begin(), categories.end(),
                                       [&](const std::string& k) { return equals_ignore_case(k, name); });
        if (!known) categories.push_back(name);
    }

    for (const auto& category : categories) {
        const auto members = category_members(requirement, category);
        if (members.empty()) throw PreprocessError("category '" + category + "' has no members");

        std::optional<long long> required = static_cast<long long>(members.size());
        for (const auto& c : requirement.constraints) {
            if (c.attribute.is_count() && c.attribute.in_category(category)) {
                required = count_threshold(c.value);
            }
        }
        if (!required) throw PreprocessError("category '" + category + "' has a non-integer count");

        CategoryTrace trace;
        trace.category = category;
        trace.required = *required;
        trace.members = static_cast<long long>(members.size());
        trace.numeric = all_numeric(members);
        trace.requirement_target = requirement_target(*required, members);

        auto target = applicant_target(*required, members, skills);
        trace.satisfied = target.satisfied;
        trace.extracted_count = target.extracted_count;
        trace.applicant_target = target.value;
        trace.extracted = target.extracted;
        extracted.insert(extracted.end(), target.extracted.begin(), target.extracted.end());

        targets.emplace_back(category);
        out.derived_requirement.constraints.push_back(
            {AttributeName(category), Number{trace.requirement_target}, Flexibility::Hard, 1.0});
        out.derived_skills.constraints.push_back(
            {AttributeName(category), Number{trace.applicant_target}, Flexibility::Hard, 1.0});
        out.traces.push_back(std::move(trace));
    }

    for (const auto& c : requirement.constraints) {
        if (!c.attribute.has_category()) out.derived_requirement.constraints.push_back(c);
    }

    for (const auto& c : skills.constraints) {
        if (c.attribute.is_count()) continue;
        const auto listed = [&](const std::vector<AttributeName>& names) {
            return std::any_of(names.begin(), names.end(),
                               [&](const AttributeName& e) { return e == c.attribute; });
        };
        // A skills constraint named like a category would shadow its target.
        if (!listed(extracted) && !listed(targets)) out.derived_skills.constraints.push_back(c);
    }
    return out;
}

}  // namespace matchmaker
