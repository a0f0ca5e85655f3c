#include "matchmaker/ingest.hpp"

#include "matchmaker/preprocess.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace matchmaker {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return out;
}

std::string read_file(const std::string& path, std::string_view what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputFileError("cannot open " + std::string(what) + " '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class ColumnRole { Mark, Total, Rank, Selected };

ColumnRole classify_column(std::string_view name) {
    if (equals_ignore_case(name, "Total")) return ColumnRole::Total;
    if (equals_ignore_case(name, "Rank")) return ColumnRole::Rank;
    if (equals_ignore_case(name, "Selected")) return ColumnRole::Selected;
    return ColumnRole::Mark;
}

}  // namespace

bool CohortTable::has_ranks() const {
    return !rows.empty() &&
           std::all_of(rows.begin(), rows.end(), [](const CohortRow& r) { return r.rank.has_value(); });
}

std::optional<std::size_t> CohortTable::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (equals_ignore_case(header[i], name)) return i;
    }
    return std::nullopt;
}

CohortTable parse_cohort(std::string_view csv) {
    std::vector<std::pair<int, std::string_view>> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        const auto eol = csv.find('\n', pos);
        const auto line = csv.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? csv.size() : eol + 1;
        ++line_no;
        if (!trim(line).empty()) lines.emplace_back(line_no, line);
    }
    if (lines.empty()) throw IngestError("cohort has no header row");

    const auto columns = split(lines.front().second, ',');
    if (columns.size() < 2) throw IngestError("cohort header needs an id column and at least one mark column");

    CohortTable table;
    table.id_column = std::string(columns.front());
    std::vector<ColumnRole> roles;
    for (std::size_t c = 1; c < columns.size(); ++c) {
        roles.push_back(classify_column(columns[c]));
        if (roles.back() == ColumnRole::Mark) table.header.emplace_back(columns[c]);
    }
    if (table.header.empty()) throw IngestError("cohort has no mark columns");

    std::set<std::string> seen_ids;
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto [number, text] = lines[l];
        const auto cells = split(text, ',');
        const auto where = "line " + std::to_string(number);
        if (cells.size() != columns.size()) {
            throw IngestError(where + ": expected " + std::to_string(columns.size()) + " cells, found " +
                              std::to_string(cells.size()));
        }

        CohortRow row;
        row.applicant_id = std::string(cells.front());
        if (row.applicant_id.empty()) throw IngestError(where + ": empty applicant id");
        if (!seen_ids.insert(row.applicant_id).second) {
            throw IngestError(where + ": duplicate applicant id '" + row.applicant_id + "'");
        }

        for (std::size_t c = 1; c < cells.size(); ++c) {
            const auto cell = cells[c];
            const auto column = std::string(columns[c]);
            const auto role = roles[c - 1];
            if (role == ColumnRole::Selected) {
                if (equals_ignore_case(cell, "yes")) row.selected = true;
                else if (equals_ignore_case(cell, "no")) row.selected = false;
                else if (!cell.empty()) {
                    throw IngestError(where + ", column '" + column + "': expected Yes or No, found '" +
                                      std::string(cell) + "'");
                }
                continue;
            }
            if (role != ColumnRole::Mark && cell.empty()) continue;

            const auto value = to_double(cell);
            if (!value) {
                throw IngestError(where + ", column '" + column + "': non-numeric value '" +
                                  std::string(cell) + "'");
            }
            switch (role) {
                case ColumnRole::Total: row.total = *value; break;
                case ColumnRole::Rank:
                    if (*value < 1.0 || *value != static_cast<int>(*value)) {
                        throw IngestError(where + ": rank must be a positive integer");
                    }
                    row.rank = static_cast<int>(*value);
                    break;
                default:
                    if (*value < 0.0 || *value > 100.0) {
                        table.warnings.push_back(where + ", column '" + column + "': mark " +
                                                 std::string(cell) + " outside [0,100]");
                    }
                    row.marks.push_back(*value);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

CohortTable load_cohort(const std::string& path) {
    return parse_cohort(read_file(path, "cohort"));
}

const MappingEntry* AttributeMapping::for_column(std::string_view column) const {
    for (const auto& e : entries) {
        if (equals_ignore_case(e.column, column)) return &e;
    }
    return nullptr;
}

AttributeMapping parse_mapping(std::string_view text, const std::string& base_dir) {
    AttributeMapping mapping;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = trim(text.substr(pos, eol == std::string_view::npos ? eol : eol - pos));
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        const auto where = "mapping line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw IngestError(where + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = std::string(trim(line.substr(eq + 1)));
        if (value.empty()) throw IngestError(where + ": empty value for '" + std::string(key) + "'");

        if (key == "id_column") {
            mapping.id_column = value;
        } else if (key == "requirement_profile") {
            std::filesystem::path p(value);
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            mapping.requirement_profile_path = p.string();
        } else if (key.starts_with("column.")) {
            const auto column = std::string(trim(key.substr(7)));
            if (column.empty()) throw IngestError(where + ": empty column name");
            if (mapping.for_column(column)) {
                throw IngestError(where + ": column '" + column + "' mapped twice");
            }
            mapping.entries.push_back({column, value});
        } else {
            throw IngestError(where + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (mapping.entries.empty()) throw IngestError("mapping has no column entries");
    return mapping;
}

AttributeMapping load_mapping(const std::string& path) {
    const auto dir = std::filesystem::path(path).parent_path().string();
    return parse_mapping(read_file(path, "mapping"), dir);
}

void check_mapping(const AttributeMapping& mapping, const Profile& requirement) {
    for (const auto& e : mapping.entries) {
        const AttributeName target(e.attribute);
        const bool known = std::any_of(
            requirement.constraints.begin(), requirement.constraints.end(),
            [&](const Constraint& c) { return !c.attribute.is_count() && c.attribute.same_name(target); });
        if (!known) {
            throw IngestError("mapped attribute '" + e.attribute + "' (column '" + e.column +
                              "') does not appear in the requisite profile");
        }
    }
}

Profile build_skills_profile(const CohortTable& cohort, std::size_t row,
                             const AttributeMapping& mapping, std::vector<std::string>* warnings) {
    if (row >= cohort.rows.size()) throw IngestError("row index out of range");
    for (const auto& e : mapping.entries) {
        if (!cohort.column_index(e.column)) {
            throw IngestError("mapped column '" + e.column + "' is missing from the cohort");
        }
    }

    Profile profile{ProfileRole::Skills, {}};
    const auto& r = cohort.rows[row];
    for (std::size_t c = 0; c < cohort.header.size(); ++c) {
        const auto* entry = mapping.for_column(cohort.header[c]);
        if (!entry) {
            if (warnings) warnings->push_back("column '" + cohort.header[c] + "' is not mapped");
            continue;
        }
        profile.constraints.push_back(
            {AttributeName(entry->attribute), Number{r.marks[c]}, Flexibility::Hard, 1.0});
    }
    return profile;
}

DecisionMatrix build_decision_matrix(const CohortTable& cohort, const std::vector<double>& weights) {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> scores;
    for (const auto& r : cohort.rows) {
        ids.push_back(r.applicant_id);
        scores.push_back(r.marks);
    }
    return DecisionMatrix(std::move(ids), cohort.header, std::move(scores), weights);
}

std::vector<SelectionOutcome> select_applicants(const CohortTable& cohort, const Profile& requirement,
                                                const AttributeMapping& mapping) {
    const auto categories = count_categories(requirement);
    if (categories.empty()) throw IngestError("requisite profile has no ::count constraints");

    std::vector<SelectionOutcome> out;
    for (std::size_t i = 0; i < cohort.rows.size(); ++i) {
        const auto skills = build_skills_profile(cohort, i, mapping);
        SelectionOutcome outcome;
        outcome.applicant_id = cohort.rows[i].applicant_id;
        for (double m : cohort.rows[i].marks) outcome.total += m;

        for (const auto& category : categories) {
            const auto members = category_members(requirement, category);
            long long required = static_cast<long long>(members.size());
            for (const auto& c : requirement.constraints) {
                if (c.attribute.is_count() && c.attribute.in_category(category)) {
                    required = count_threshold(c.value).value_or(required);
                }
            }

            long long met = 0;
            std::vector<std::string> unmet;
            for (const auto& member : members) {
                const auto held = std::find_if(
                    skills.constraints.begin(), skills.constraints.end(),
                    [&](const Constraint& s) { return s.attribute.same_name(member.attribute); });
                if (held != skills.constraints.end() && satisfies(held->value, member.value)) {
                    ++met;
                } else {
                    unmet.push_back(member.attribute.name());
                }
            }
            if (required == static_cast<long long>(members.size())) {
                outcome.failed_compulsory.insert(outcome.failed_compulsory.end(), unmet.begin(), unmet.end());
            }
            if (met < required) outcome.short_categories.push_back(category);
        }

        for (const auto& c : requirement.constraints) {
            if (c.attribute.has_category()) continue;
            const auto* held = skills.find(c.attribute);
            if (held && !satisfies(held->value, c.value)) {
                outcome.failed_compulsory.push_back(c.attribute.name());
                outcome.short_categories.push_back(c.attribute.name());
            }
        }

        outcome.eligible = outcome.short_categories.empty();
        out.push_back(std::move(outcome));
    }
    return out;
}

std::vector<double> parse_weights(std::string_view text) {
    std::vector<double> out;
    for (const auto piece : split(text, ',')) {
        const auto w = to_double(piece);
        if (!w) throw IngestError("invalid weight '" + std::string(piece) + "'");
        out.push_back(*w);
    }
    return out;
}

}  // namespace matchmaker
