#include "matchmaker/model.hpp"

#include "matchmaker/profile_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace matchmaker {

namespace {

std::string_view trim_view(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string normalize_key(std::string_view text) {
    std::string out(trim_view(text));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool equals_ignore_case(std::string_view a, std::string_view b) {
    return normalize_key(a) == normalize_key(b);
}

AttributeName::AttributeName(std::string name) : name_(trim_view(name)) {}

AttributeName::AttributeName(std::string category, std::string name)
    : category_(std::string(trim_view(category))), name_(trim_view(name)) {}

AttributeName AttributeName::parse(std::string_view text) {
    const auto sep = text.find("::");
    if (sep == std::string_view::npos) return AttributeName(std::string(text));
    return AttributeName(std::string(text.substr(0, sep)), std::string(text.substr(sep + 2)));
}

bool AttributeName::is_count() const {
    return equals_ignore_case(name_, kCountKeyword);
}

bool AttributeName::in_category(std::string_view category) const {
    return category_ && equals_ignore_case(*category_, category);
}

bool AttributeName::same_name(const AttributeName& other) const {
    return equals_ignore_case(name_, other.name_);
}

std::string AttributeName::to_string() const {
    return category_ ? *category_ + "::" + name_ : name_;
}

bool operator==(const AttributeName& a, const AttributeName& b) {
    if (a.category_.has_value() != b.category_.has_value()) return false;
    if (a.category_ && !equals_ignore_case(*a.category_, *b.category_)) return false;
    return equals_ignore_case(a.name_, b.name_);
}

bool TextSet::contains(std::string_view text) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const std::string& m) { return equals_ignore_case(m, text); });
}

bool is_numeric(const AttributeValue& value) {
    return std::holds_alternative<Number>(value) || std::holds_alternative<Range>(value);
}

std::string_view value_kind(const AttributeValue& value) {
    static constexpr std::string_view kNames[] = {"number", "range", "at-least", "text-set",
                                                  "text"};
    return kNames[value.index()];
}

std::optional<Flexibility> parse_flexibility(std::string_view token) {
    token = trim_view(token);
    if (token == "No") return Flexibility::Hard;
    if (token == "Yes") return Flexibility::Soft;
    return std::nullopt;
}

std::string_view flexibility_token(Flexibility flexibility) {
    return flexibility == Flexibility::Hard ? "No" : "Yes";
}

std::string_view role_name(ProfileRole role) {
    return role == ProfileRole::Requirement ? "requirement" : "skills";
}

const Constraint* Profile::find(const AttributeName& attribute) const {
    for (const auto& c : constraints) {
        if (c.attribute == attribute) return &c;
    }
    return nullptr;
}

std::string_view violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::EmptyName: return "empty-name";
        case ViolationCode::EmptyCategory: return "empty-category";
        case ViolationCode::CountWithoutCategory: return "count-without-category";
        case ViolationCode::DuplicateAttribute: return "duplicate-attribute";
        case ViolationCode::PriorityOutOfRange: return "priority-out-of-range";
        case ViolationCode::InvertedRange: return "inverted-range";
        case ViolationCode::NegativeValue: return "negative-value";
        case ViolationCode::AtLeastOutsideCount: return "at-least-outside-count";
        case ViolationCode::InvalidCountValue: return "invalid-count-value";
        case ViolationCode::DanglingCount: return "dangling-count";
        case ViolationCode::CountOutOfRange: return "count-out-of-range";
        case ViolationCode::EmptyTextSet: return "empty-text-set";
        case ViolationCode::DuplicateSetMember: return "duplicate-set-member";
        case ViolationCode::UnrenderableText: return "unrenderable-text";
        case ViolationCode::MixedCategory: return "mixed-category";
    }
    return "unknown";
}

std::optional<long long> count_threshold(const AttributeValue& value) {
    if (const auto* n = std::get_if<Number>(&value)) {
        if (std::floor(n->value) != n->value) return std::nullopt;
        return static_cast<long long>(n->value);
    }
    if (const auto* a = std::get_if<AtLeast>(&value)) return a->n;
    return std::nullopt;
}

bool is_renderable_text(std::string_view text) {
    if (text.empty() || trim_view(text) != text) return false;
    if (text.find_first_of(",<>{}\n\r") != std::string_view::npos) return false;
    // Text that reads back as a number, range or threshold would change kind.
    const auto reparsed = parse_value(text);
    return reparsed && std::holds_alternative<Text>(*reparsed);
}

std::vector<Constraint> category_members(const Profile& profile, std::string_view category) {
    std::vector<Constraint> out;
    for (const auto& c : profile.constraints) {
        if (c.attribute.in_category(category) && !c.attribute.is_count()) out.push_back(c);
    }
    return out;
}

std::vector<std::string> count_categories(const Profile& profile) {
    std::vector<std::string> out;
    for (const auto& c : profile.constraints) {
        if (c.attribute.is_count() && c.attribute.has_category()) {
            out.push_back(*c.attribute.category());
        }
    }
    return out;
}

namespace {

void check_value(std::size_t index, const Constraint& c, std::vector<Violation>& out) {
    auto report = [&](ViolationCode code, std::string detail) {
        out.push_back({index, code, std::move(detail)});
    };
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Number>) {
                if (v.value < 0.0) report(ViolationCode::NegativeValue, "number is negative");
            } else if constexpr (std::is_same_v<T, Range>) {
                if (v.lo > v.hi) report(ViolationCode::InvertedRange, "range has lo > hi");
                if (v.lo < 0.0) report(ViolationCode::NegativeValue, "range bound is negative");
            } else if constexpr (std::is_same_v<T, AtLeast>) {
                if (v.n < 0) report(ViolationCode::NegativeValue, "threshold is negative");
                if (!c.attribute.is_count()) {
                    report(ViolationCode::AtLeastOutsideCount,
                           ">= threshold is only allowed on ::count attributes");
                }
            } else if constexpr (std::is_same_v<T, TextSet>) {
                if (v.members.empty()) report(ViolationCode::EmptyTextSet, "set has no members");
                std::set<std::string> seen;
                for (const auto& m : v.members) {
                    if (!seen.insert(normalize_key(m)).second) {
                        report(ViolationCode::DuplicateSetMember, "duplicate member '" + m + "'");
                    }
                    if (!is_renderable_text(m)) {
                        report(ViolationCode::UnrenderableText, "set member '" + m + "'");
                    }
                }
            } else {
                if (!is_renderable_text(v.value)) {
                    report(ViolationCode::UnrenderableText, "text '" + v.value + "'");
                }
            }
        },
        c.value);
}

}  // namespace

std::vector<Violation> validate_profile(const Profile& profile) {
    std::vector<Violation> out;
    std::map<std::string, std::size_t> first_seen;

    for (std::size_t i = 0; i < profile.constraints.size(); ++i) {
        const auto& c = profile.constraints[i];
        const auto& attr = c.attribute;
        if (attr.name().empty()) out.push_back({i, ViolationCode::EmptyName, "attribute name is empty"});
        if (attr.category() && attr.category()->empty()) {
            out.push_back({i, ViolationCode::EmptyCategory, "category is empty"});
        }
        if (attr.is_count() && !attr.has_category()) {
            out.push_back({i, ViolationCode::CountWithoutCategory, "'count' needs a category"});
        }
        if (!(c.priority >= 0.0 && c.priority <= 1.0)) {
            out.push_back({i, ViolationCode::PriorityOutOfRange, "priority must lie in [0,1]"});
        }
        const auto key = normalize_key(attr.category().value_or("")) + "::" + normalize_key(attr.name());
        if (auto [it, inserted] = first_seen.emplace(key, i); !inserted) {
            out.push_back({i, ViolationCode::DuplicateAttribute,
                           "'" + attr.to_string() + "' already declared by constraint " +
                               std::to_string(it->second + 1)});
        }
        if (attr.is_count() && attr.has_category() && !count_threshold(c.value)) {
            out.push_back({i, ViolationCode::InvalidCountValue,
                           "count must be an integer or >= threshold"});
        }
        check_value(i, c, out);
    }

    // Requisite-side rules: counts must refer to real categories of
    // homogeneous members. Skills-side counts are ignored by matching.
    if (profile.role == ProfileRole::Requirement) {
        for (std::size_t i = 0; i < profile.constraints.size(); ++i) {
            const auto& c = profile.constraints[i];
            if (!c.attribute.is_count() || !c.attribute.has_category()) continue;
            const auto& category = *c.attribute.category();
            const auto members = category_members(profile, category);
            const auto threshold = count_threshold(c.value);
            if (members.empty()) {
                out.push_back({i, ViolationCode::DanglingCount,
                               "category '" + category + "' has no member constraints"});
            } else if (threshold &&
                       (*threshold < 1 || *threshold > static_cast<long long>(members.size()))) {
                out.push_back({i, ViolationCode::CountOutOfRange,
                               "count " + std::to_string(*threshold) + " outside 1.." +
                                   std::to_string(members.size())});
            }
            const auto numeric = std::count_if(members.begin(), members.end(),
                                               [](const Constraint& m) { return is_numeric(m.value); });
            if (numeric != 0 && numeric != static_cast<long>(members.size())) {
                out.push_back({i, ViolationCode::MixedCategory,
                               "category '" + category + "' mixes numeric and non-numeric members"});
            }
        }
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const Violation& a, const Violation& b) { return a.index < b.index; });
    return out;
}

}  // namespace matchmaker
