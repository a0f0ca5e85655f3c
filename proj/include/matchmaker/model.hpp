#pragma once

/// @file model.hpp
/// @brief Constraint and profile data model used by both requisite and
/// skills profiles.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace matchmaker {

/// A named input file could not be opened or read.
class InputFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lowercases ASCII letters and strips surrounding whitespace.
[[nodiscard]] std::string normalize_key(std::string_view text);

/// Case-insensitive comparison after trimming surrounding whitespace.
[[nodiscard]] bool equals_ignore_case(std::string_view a, std::string_view b);

/// Keyword naming the threshold constraint of a category.
inline constexpr std::string_view kCountKeyword = "count";

/// Attribute of a constraint, optionally scoped to a category with `::`.
///
/// Spelling is preserved as written; equality ignores case and
/// surrounding whitespace.
class AttributeName {
public:
    AttributeName() = default;
    explicit AttributeName(std::string name);
    AttributeName(std::string category, std::string name);

    /// Parses `name` or `category::name`.
    [[nodiscard]] static AttributeName parse(std::string_view text);

    [[nodiscard]] const std::optional<std::string>& category() const { return category_; }
    [[nodiscard]] const std::string& name() const { return name_; }

    [[nodiscard]] bool has_category() const { return category_.has_value(); }
    [[nodiscard]] bool is_count() const;

    /// True when the category matches `category` (case-insensitive).
    [[nodiscard]] bool in_category(std::string_view category) const;

    /// Compares the unscoped name only.
    [[nodiscard]] bool same_name(const AttributeName& other) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const AttributeName& a, const AttributeName& b);

private:
    std::optional<std::string> category_;
    std::string name_;
};

struct Number {
    double value = 0.0;
    friend bool operator==(const Number&, const Number&) = default;
};

/// Closed interval `lo...hi`.
struct Range {
    double lo = 0.0;
    double hi = 0.0;
    friend bool operator==(const Range&, const Range&) = default;
};

/// `>=n`, only meaningful as the value of a `::count` attribute.
struct AtLeast {
    long long n = 0;
    friend bool operator==(const AtLeast&, const AtLeast&) = default;
};

/// `{a, b, ...}`; members keep their written order.
struct TextSet {
    std::vector<std::string> members;
    [[nodiscard]] bool contains(std::string_view text) const;
    friend bool operator==(const TextSet&, const TextSet&) = default;
};

struct Text {
    std::string value;
    friend bool operator==(const Text&, const Text&) = default;
};

using AttributeValue = std::variant<Number, Range, AtLeast, TextSet, Text>;

[[nodiscard]] bool is_numeric(const AttributeValue& value);
[[nodiscard]] std::string_view value_kind(const AttributeValue& value);

enum class Flexibility { Hard, Soft };

/// `No` is a hard constraint, `Yes` a soft one.
[[nodiscard]] std::optional<Flexibility> parse_flexibility(std::string_view token);
[[nodiscard]] std::string_view flexibility_token(Flexibility flexibility);

/// One quadruple <attribute, value, flexibility, priority>.
struct Constraint {
    AttributeName attribute;
    AttributeValue value;
    Flexibility flexibility = Flexibility::Hard;
    double priority = 1.0;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class ProfileRole { Requirement, Skills };

[[nodiscard]] std::string_view role_name(ProfileRole role);

struct Profile {
    ProfileRole role = ProfileRole::Requirement;
    std::vector<Constraint> constraints;

    /// First constraint whose attribute equals `attribute`.
    [[nodiscard]] const Constraint* find(const AttributeName& attribute) const;

    friend bool operator==(const Profile&, const Profile&) = default;
};

enum class ViolationCode {
    EmptyName,
    EmptyCategory,
    CountWithoutCategory,
    DuplicateAttribute,
    PriorityOutOfRange,
    InvertedRange,
    NegativeValue,
    AtLeastOutsideCount,
    InvalidCountValue,
    DanglingCount,
    CountOutOfRange,
    EmptyTextSet,
    DuplicateSetMember,
    UnrenderableText,
    MixedCategory,
};

[[nodiscard]] std::string_view violation_code_name(ViolationCode code);

struct Violation {
    std::size_t index = 0;  ///< offending constraint, 0-based
    ViolationCode code = ViolationCode::EmptyName;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every profile invariant. An empty result means the profile is valid.
[[nodiscard]] std::vector<Violation> validate_profile(const Profile& profile);

/// Member constraints of `category`, excluding its `::count` constraint.
[[nodiscard]] std::vector<Constraint> category_members(const Profile& profile,
                                                       std::string_view category);

/// Categories that carry a `::count` constraint, in order of appearance.
[[nodiscard]] std::vector<std::string> count_categories(const Profile& profile);

/// Required satisfaction count S of a `::count` constraint value.
[[nodiscard]] std::optional<long long> count_threshold(const AttributeValue& value);

/// True when the text would survive a render/parse cycle as a Text value.
[[nodiscard]] bool is_renderable_text(std::string_view text);

}  // namespace matchmaker
