#include "matchmaker/profile_dsl.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace matchmaker {

namespace {

constexpr std::string_view kSpace = " \t\r";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kSpace);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kSpace);
    return s.substr(first, last - first + 1);
}

bool is_number_token(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    const auto int_start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == int_start) return false;
    if (i < s.size() && s[i] == '.') {
        const auto frac_start = ++i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == frac_start) return false;
    }
    return i == s.size();
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!is_number_token(s)) return std::nullopt;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return out;
}

std::string describe(std::string_view found) {
    if (found.empty()) return "end of line";
    return "'" + std::string(found) + "'";
}

// Splits a flat comma list, returning each piece with its offset.
std::vector<std::pair<std::size_t, std::string_view>> split_commas(std::string_view s,
                                                                   std::size_t base) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        out.emplace_back(base + start, s.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::string expected, std::string found)
    : std::runtime_error("line " + std::to_string(span.line) + ", column " +
                         std::to_string(span.column) + ": expected " + expected + ", found " +
                         describe(found)),
      span_(span),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::optional<AttributeValue> parse_value(std::string_view token) {
    token = trim(token);
    if (token.empty()) return std::nullopt;

    if (token.front() == '{') {
        if (token.back() != '}' || token.size() < 2) return std::nullopt;
        const auto body = token.substr(1, token.size() - 2);
        if (body.find_first_of("{}<>") != std::string_view::npos) return std::nullopt;
        TextSet set;
        for (const auto& [offset, piece] : split_commas(body, 0)) {
            const auto member = trim(piece);
            if (member.empty()) return std::nullopt;
            set.members.emplace_back(member);
        }
        return set;
    }

    if (token.starts_with(">=")) {
        const auto n = parse_number(token.substr(2));
        if (!n || *n != static_cast<double>(static_cast<long long>(*n))) return std::nullopt;
        return AtLeast{static_cast<long long>(*n)};
    }

    if (const auto dots = token.find("..."); dots != std::string_view::npos) {
        const auto lo = parse_number(token.substr(0, dots));
        const auto hi = parse_number(token.substr(dots + 3));
        if (lo && hi) return Range{*lo, *hi};
    }

    if (const auto n = parse_number(token)) return Number{*n};

    if (token.find_first_of(",<>{}") != std::string_view::npos) return std::nullopt;
    return Text{std::string(token)};
}

ParsedProfile parse_profile_document(std::string_view source, ProfileRole role) {
    ParsedProfile out;
    out.profile.role = role;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= source.size()) {
        const auto eol = source.find('\n', pos);
        const auto raw = source.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                          : eol - pos);
        pos = eol == std::string_view::npos ? source.size() + 1 : eol + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto col = [&](std::size_t offset_in_raw) {
            return static_cast<int>(offset_in_raw) + 1;
        };
        const auto lead = static_cast<std::size_t>(line.data() - raw.data());
        auto fail = [&](std::size_t offset_in_line, std::string expected, std::string_view found) {
            throw ParseError({line_no, col(lead + offset_in_line)}, std::move(expected),
                             std::string(found));
        };

        if (line.front() != '<') fail(0, "'<'", line.substr(0, 1));
        if (line.back() != '>') fail(line.size() - 1, "'>'", line.substr(line.size() - 1));
        const auto body = line.substr(1, line.size() - 2);
        const std::size_t body_offset = 1;

        // attribute
        const auto first_comma = body.find(',');
        if (first_comma == std::string_view::npos) fail(body_offset + body.size(), "','", "");
        const auto attr_text = trim(body.substr(0, first_comma));
        if (attr_text.empty() || attr_text.find_first_of("{}<>") != std::string_view::npos) {
            fail(body_offset, "attribute name", attr_text);
        }
        const auto scope = attr_text.find("::");
        if (scope != std::string_view::npos) {
            const auto category = trim(attr_text.substr(0, scope));
            const auto name = trim(attr_text.substr(scope + 2));
            if (category.empty() || name.empty() || name.find(':') != std::string_view::npos) {
                fail(body_offset, "'category::name'", attr_text);
            }
        } else if (attr_text.find(':') != std::string_view::npos) {
            fail(body_offset, "'::' scope operator", attr_text);
        }

        // value: a set may contain commas, everything else runs to the next comma
        std::size_t value_start = first_comma + 1;
        std::size_t value_end = 0;
        const auto after_attr = body.substr(value_start);
        const auto value_lead = after_attr.find_first_not_of(kSpace);
        if (value_lead != std::string_view::npos && after_attr[value_lead] == '{') {
            const auto close = body.find('}', value_start + value_lead);
            if (close == std::string_view::npos) {
                fail(body_offset + body.size(), "'}'", "");
            }
            value_end = close + 1;
            const auto rest = trim(body.substr(value_end));
            if (!rest.starts_with(',')) fail(body_offset + value_end, "','", rest.substr(0, 1));
            value_end = body.find(',', value_end);
        } else {
            value_end = body.find(',', value_start);
            if (value_end == std::string_view::npos) fail(body_offset + body.size(), "','", "");
        }
        const auto value_text = body.substr(value_start, value_end - value_start);
        const auto value_column = body_offset + value_start;

        const auto tail = split_commas(body.substr(value_end + 1), value_end + 1);
        if (tail.size() != 2) {
            const auto at = tail.size() > 2 ? tail[2].first - 1 : body.size();
            fail(body_offset + at, "exactly four fields", tail.size() > 2 ? "','" : "");
        }

        auto value = parse_value(value_text);
        if (!value) fail(value_column, "range, threshold, set, number or text", trim(value_text));
        if (const auto* r = std::get_if<Range>(&*value); r && r->lo > r->hi) {
            fail(value_column, "range with lo <= hi", trim(value_text));
        }

        const auto flex = parse_flexibility(tail[0].second);
        if (!flex) fail(body_offset + tail[0].first, "'Yes' or 'No'", trim(tail[0].second));

        const auto priority = parse_number(tail[1].second);
        if (!priority || *priority < 0.0 || *priority > 1.0) {
            fail(body_offset + tail[1].first, "priority in [0,1]", trim(tail[1].second));
        }

        out.profile.constraints.push_back(
            Constraint{AttributeName::parse(attr_text), std::move(*value), *flex, *priority});
        out.spans.push_back({line_no, col(lead)});
    }
    return out;
}

Profile parse_profile(std::string_view source, ProfileRole role) {
    return parse_profile_document(source, role).profile;
}

std::string format_number(double value) {
    char buf[1100];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc{}) throw std::invalid_argument("number out of printable range");
    std::string out(buf, ptr);
    if (out == "-0") out = "0";
    return out;
}

std::string render_value(const AttributeValue& value) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Number>) {
                return format_number(v.value);
            } else if constexpr (std::is_same_v<T, Range>) {
                return format_number(v.lo) + "..." + format_number(v.hi);
            } else if constexpr (std::is_same_v<T, AtLeast>) {
                return ">=" + std::to_string(v.n);
            } else if constexpr (std::is_same_v<T, TextSet>) {
                std::string out = "{";
                for (std::size_t i = 0; i < v.members.size(); ++i) {
                    if (!is_renderable_text(v.members[i])) {
                        throw std::invalid_argument("set member '" + v.members[i] +
                                                    "' cannot be rendered");
                    }
                    if (i) out += ", ";
                    out += v.members[i];
                }
                return out + "}";
            } else {
                if (!is_renderable_text(v.value)) {
                    throw std::invalid_argument("text '" + v.value + "' cannot be rendered");
                }
                return v.value;
            }
        },
        value);
}

std::string render_constraint(const Constraint& c) {
    return "<" + c.attribute.to_string() + "," + render_value(c.value) + "," +
           std::string(flexibility_token(c.flexibility)) + "," + format_number(c.priority) + ">";
}

std::string render_profile(const Profile& profile) {
    std::string out;
    for (const auto& c : profile.constraints) {
        out += render_constraint(c);
        out += '\n';
    }
    return out;
}

ParsedProfile load_profile_file(const std::string& path, ProfileRole role) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFileError("cannot open profile '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile_document(buf.str(), role);
}

}  // namespace matchmaker
