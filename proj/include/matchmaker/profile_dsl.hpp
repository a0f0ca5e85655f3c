#pragma once

/// @file profile_dsl.hpp
/// @brief Text format for profiles: one `<attribute,value,flexibility,priority>`
/// quadruple per line.
///
/// Grammar:
///
///     profile  := line*
///     line     := '<' attr ',' value ',' flex ',' priority '>'
///     attr     := ident ('::' ident)?
///     value    := range | atleast | set | number | text
///     range    := number '...' number
///     atleast  := '>=' number
///     set      := '{' text (',' text)* '}'
///
/// Blank lines and lines starting with `#` are ignored. Whitespace around
/// fields, commas and `::` is insignificant.

#include "matchmaker/model.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchmaker {

struct SourceSpan {
    int line = 1;
    int column = 1;
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, std::string expected, std::string found);

    [[nodiscard]] const SourceSpan& span() const { return span_; }
    [[nodiscard]] const std::string& expected() const { return expected_; }
    [[nodiscard]] const std::string& found() const { return found_; }

private:
    SourceSpan span_;
    std::string expected_;
    std::string found_;
};

/// A parsed profile plus the source position of each constraint.
struct ParsedProfile {
    Profile profile;
    std::vector<SourceSpan> spans;
};

/// Classifies a single value token. Returns nullopt for malformed sets or
/// thresholds; ranges are returned even when lo > hi.
[[nodiscard]] std::optional<AttributeValue> parse_value(std::string_view token);

/// Throws ParseError on the first malformed line.
[[nodiscard]] ParsedProfile parse_profile_document(std::string_view source, ProfileRole role);

[[nodiscard]] Profile parse_profile(std::string_view source, ProfileRole role);

/// Shortest decimal form that reads back to the same double.
[[nodiscard]] std::string format_number(double value);

[[nodiscard]] std::string render_value(const AttributeValue& value);
[[nodiscard]] std::string render_constraint(const Constraint& constraint);

/// One line per constraint, each terminated by '\n'. Throws
/// std::invalid_argument when a text value cannot be written back verbatim.
[[nodiscard]] std::string render_profile(const Profile& profile);

/// Reads and parses a profile file. Throws InputFileError when the file cannot be read.
[[nodiscard]] ParsedProfile load_profile_file(const std::string& path, ProfileRole role);

}  // namespace matchmaker
