// Command-line front end: validate profiles, score matches, rank cohorts,
// run the SAW/TOPSIS baselines and reproduce the cohort comparison.
//
// Exit codes: 0 success, 1 domain or validation failure, 2 I/O or usage.

#include "matchmaker/evaluation.hpp"
#include "matchmaker/ingest.hpp"
#include "matchmaker/match.hpp"
#include "matchmaker/mcda.hpp"
#include "matchmaker/pipeline.hpp"
#include "matchmaker/profile_dsl.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifndef MATCHMAKER_DATA_DIR
#define MATCHMAKER_DATA_DIR "data"
#endif

namespace {

using namespace matchmaker;
using json = nlohmann::ordered_json;

enum class Format { Table, Csv, Structured };

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kIoFailure = 2;

/// Failure already reported to the user; carries the exit code.
struct Exit {
    int code;
};

struct Options {
    Format format = Format::Table;
    std::string output;
    std::string weights;
};

std::string num(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.5f}", v);
}

// Reals in structured records carry the same 5 decimals as the tables.
json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    const double rounded = std::round(v * 1e5) / 1e5;
    return rounded == 0.0 ? 0.0 : rounded;
}

std::string csv_cell(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string describe_value(const AttributeValue& value) {
    if (const auto* n = std::get_if<Number>(&value)) return num(n->value);
    return render_value(value);
}

std::optional<std::vector<double>> weights_from(const Options& opts) {
    if (opts.weights.empty()) return std::nullopt;
    return parse_weights(opts.weights);
}

ParsedProfile read_profile(const std::string& path, ProfileRole role) {
    try {
        return load_profile_file(path, role);
    } catch (const ParseError& e) {
        fmt::print(std::cerr, "{}:{}:{}: parse-error: expected {}, found '{}'\n", path, e.span().line,
                   e.span().column, e.expected(), e.found());
        throw Exit{kDomainFailure};
    }
}

/// Prints violations to stderr and fails when there are any.
void require_valid(const std::string& path, const ParsedProfile& parsed) {
    const auto violations = validate_profile(parsed.profile);
    for (const auto& v : violations) {
        const auto& span = parsed.spans[v.index];
        fmt::print(std::cerr, "{}:{}:{}: {}: {}\n", path, span.line, span.column,
                   violation_code_name(v.code), v.detail);
    }
    if (!violations.empty()) throw Exit{kDomainFailure};
}

// validate ------------------------------------------------------------------

int cmd_validate(std::ostream& out, const Options& opts, const std::string& path, ProfileRole role) {
    ParsedProfile parsed;
    try {
        parsed = load_profile_file(path, role);
    } catch (const ParseError& e) {
        switch (opts.format) {
            case Format::Structured:
                out << json{{"record", "violation"}, {"line", e.span().line}, {"column", e.span().column},
                            {"code", "parse-error"},
                            {"detail", "expected " + e.expected() + ", found '" + e.found() + "'"}}
                           .dump()
                    << '\n';
                out << json{{"record", "summary"}, {"valid", false}, {"constraints", nullptr}}.dump() << '\n';
                break;
            case Format::Csv:
                out << "line,column,code,detail\n";
                out << fmt::format("{},{},parse-error,{}\n", e.span().line, e.span().column,
                                   csv_cell("expected " + e.expected() + ", found '" + e.found() + "'"));
                break;
            case Format::Table:
                fmt::print(out, "{}:{}:{}: parse-error: expected {}, found '{}'\n", path, e.span().line,
                           e.span().column, e.expected(), e.found());
        }
        return kDomainFailure;
    }

    const auto violations = validate_profile(parsed.profile);
    switch (opts.format) {
        case Format::Structured:
            for (const auto& v : violations) {
                const auto& span = parsed.spans[v.index];
                out << json{{"record", "violation"}, {"line", span.line}, {"column", span.column},
                            {"code", violation_code_name(v.code)}, {"detail", v.detail}}
                           .dump()
                    << '\n';
            }
            out << json{{"record", "summary"}, {"valid", violations.empty()},
                        {"constraints", parsed.profile.constraints.size()}}
                       .dump()
                << '\n';
            break;
        case Format::Csv:
            out << "line,column,code,detail\n";
            for (const auto& v : violations) {
                const auto& span = parsed.spans[v.index];
                out << fmt::format("{},{},{},{}\n", span.line, span.column, violation_code_name(v.code),
                                   csv_cell(v.detail));
            }
            break;
        case Format::Table:
            for (const auto& v : violations) {
                const auto& span = parsed.spans[v.index];
                fmt::print(out, "{}:{}:{}: {}: {}\n", path, span.line, span.column,
                           violation_code_name(v.code), v.detail);
            }
            if (violations.empty()) {
                fmt::print(out, "{}: ok ({} constraints)\n", path, parsed.profile.constraints.size());
            }
    }
    return violations.empty() ? kOk : kDomainFailure;
}

// match ---------------------------------------------------------------------

int cmd_match(std::ostream& out, const Options& opts, const std::string& requirement_path,
              const std::string& skills_path) {
    const auto requirement = read_profile(requirement_path, ProfileRole::Requirement);
    const auto skills = read_profile(skills_path, ProfileRole::Skills);
    require_valid(requirement_path, requirement);
    require_valid(skills_path, skills);

    const auto report = profile_similarity(requirement.profile, skills.profile);
    const auto applicant_text = [](const ConstraintMatch& f) {
        return f.applicant_value ? describe_value(*f.applicant_value) : std::string("-");
    };

    switch (opts.format) {
        case Format::Structured:
            out << json{{"record", "score"}, {"score", json_number(report.score)}}.dump() << '\n';
            for (const auto& f : report.factors) {
                out << json{{"record", "factor"},
                            {"attribute", f.attribute.to_string()},
                            {"requirement", describe_value(f.requirement_value)},
                            {"applicant", f.applicant_value ? json(describe_value(*f.applicant_value)) : json()},
                            {"raw_similarity", json_number(f.raw_similarity)},
                            {"factor", json_number(f.applied_factor)},
                            {"disposition", disposition_name(f.disposition)}}
                           .dump()
                    << '\n';
            }
            for (const auto& t : report.traces) {
                out << json{{"record", "trace"}, {"category", t.category}, {"S", t.required},
                            {"M", t.members}, {"T", t.satisfied}, {"N", t.extracted_count},
                            {"Pcc", json_number(t.requirement_target)}, {"Pac", json_number(t.applicant_target)}}
                           .dump()
                    << '\n';
            }
            break;
        case Format::Csv:
            out << "record,name,requirement,applicant,raw_similarity,factor,disposition\n";
            out << fmt::format("score,,,,,{},\n", num(report.score));
            for (const auto& f : report.factors) {
                out << fmt::format("factor,{},{},{},{},{},{}\n", csv_cell(f.attribute.to_string()),
                                   csv_cell(describe_value(f.requirement_value)), csv_cell(applicant_text(f)),
                                   num(f.raw_similarity), num(f.applied_factor),
                                   disposition_name(f.disposition));
            }
            out << "\nrecord,category,S,M,T,N,Pcc,Pac\n";
            for (const auto& t : report.traces) {
                out << fmt::format("trace,{},{},{},{},{},{},{}\n", csv_cell(t.category), t.required, t.members,
                                   t.satisfied, t.extracted_count, num(t.requirement_target),
                                   num(t.applicant_target));
            }
            break;
        case Format::Table:
            fmt::print(out, "score {}\n\n", num(report.score));
            fmt::print(out, "{:<40} {:>24} {:>24} {:>10} {:>10}  {}\n", "attribute", "requirement", "applicant",
                       "similarity", "factor", "disposition");
            for (const auto& f : report.factors) {
                fmt::print(out, "{:<40} {:>24} {:>24} {:>10} {:>10}  {}\n", f.attribute.to_string(),
                           describe_value(f.requirement_value), applicant_text(f), num(f.raw_similarity),
                           num(f.applied_factor), disposition_name(f.disposition));
            }
            if (!report.traces.empty()) {
                fmt::print(out, "\n{:<24} {:>4} {:>4} {:>4} {:>4} {:>12} {:>12}\n", "category", "S", "M", "T",
                           "N", "Pcc", "Pac");
                for (const auto& t : report.traces) {
                    fmt::print(out, "{:<24} {:>4} {:>4} {:>4} {:>4} {:>12} {:>12}\n", t.category, t.required,
                               t.members, t.satisfied, t.extracted_count, num(t.requirement_target),
                               num(t.applicant_target));
                }
            }
    }
    return kOk;
}

// cohort helpers ------------------------------------------------------------

struct Cohort {
    CohortTable table;
    AttributeMapping mapping;
    Profile requirement;
};

Cohort load_cohort_inputs(const std::string& cohort_path, const std::string& mapping_path,
                          const std::string& requirement_override) {
    Cohort c;
    c.table = load_cohort(cohort_path);
    c.mapping = load_mapping(mapping_path);
    const auto profile_path =
        requirement_override.empty() ? c.mapping.requirement_profile_path : requirement_override;
    if (profile_path.empty()) {
        std::cerr << "no requisite profile given and the mapping names none\n";
        throw Exit{kIoFailure};
    }
    const auto parsed = read_profile(profile_path, ProfileRole::Requirement);
    require_valid(profile_path, parsed);
    c.requirement = parsed.profile;
    if (!c.mapping.id_column.empty() && !equals_ignore_case(c.mapping.id_column, c.table.id_column)) {
        throw IngestError("mapping expects id column '" + c.mapping.id_column + "' but cohort has '" +
                          c.table.id_column + "'");
    }
    check_mapping(c.mapping, c.requirement);
    for (const auto& w : c.table.warnings) std::cerr << "warning: " << w << '\n';
    return c;
}

std::vector<std::size_t> presentation_order(const ScoredRanking& ranking) {
    std::vector<std::size_t> order(ranking.entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ea = ranking.entries[a];
        const auto& eb = ranking.entries[b];
        if (ea.rank != eb.rank) return ea.rank < eb.rank;
        return ea.applicant_id < eb.applicant_id;
    });
    return order;
}

// rank ----------------------------------------------------------------------

int cmd_rank(std::ostream& out, const Options& opts, const std::string& requirement_path,
             const std::string& cohort_path, const std::string& mapping_path) {
    const auto c = load_cohort_inputs(cohort_path, mapping_path, requirement_path);
    const auto ranking = amm_ranking(c.table, c.requirement, c.mapping);

    std::map<std::string, bool> eligible;
    const bool has_counts = !count_categories(c.requirement).empty();
    if (has_counts) {
        for (const auto& s : select_applicants(c.table, c.requirement, c.mapping)) eligible[s.applicant_id] = s.eligible;
    }
    const auto eligible_text = [&](const std::string& id) -> std::string {
        if (!has_counts) return "-";
        return eligible.at(id) ? "yes" : "no";
    };

    const auto order = presentation_order(ranking);
    switch (opts.format) {
        case Format::Structured:
            for (auto i : order) {
                const auto& e = ranking.entries[i];
                json rec{{"record", "ranking"}, {"method", "AMM"}, {"applicant", e.applicant_id},
                         {"score", json_number(e.score)}, {"rank", e.rank}};
                rec["eligible"] = has_counts ? json(eligible.at(e.applicant_id)) : json();
                out << rec.dump() << '\n';
            }
            break;
        case Format::Csv:
            out << "rank,applicant,score,eligible\n";
            for (auto i : order) {
                const auto& e = ranking.entries[i];
                out << fmt::format("{},{},{},{}\n", e.rank, csv_cell(e.applicant_id), num(e.score),
                                   eligible_text(e.applicant_id));
            }
            break;
        case Format::Table:
            fmt::print(out, "{:>4}  {:<12} {:>9}  {}\n", "rank", "applicant", "AMM", "eligible");
            for (auto i : order) {
                const auto& e = ranking.entries[i];
                fmt::print(out, "{:>4}  {:<12} {:>9}  {}\n", e.rank, e.applicant_id, num(e.score),
                           eligible_text(e.applicant_id));
            }
    }
    return kOk;
}

// baseline ------------------------------------------------------------------

int cmd_baseline(std::ostream& out, const Options& opts, const std::string& cohort_path) {
    const auto table = load_cohort(cohort_path);
    for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
    const auto matrix = build_decision_matrix(table, resolve_weights(table, weights_from(opts)));
    const auto saw = saw_scores(matrix);
    const auto topsis = topsis_scores(matrix);

    switch (opts.format) {
        case Format::Structured:
            for (const auto* ranking : {&saw, &topsis}) {
                for (const auto& e : ranking->entries) {
                    out << json{{"record", "ranking"}, {"method", method_name(ranking->method)},
                                {"applicant", e.applicant_id}, {"score", json_number(e.score)}, {"rank", e.rank}}
                               .dump()
                        << '\n';
                }
            }
            break;
        case Format::Csv:
            out << "applicant,saw_score,saw_rank,topsis_score,topsis_rank\n";
            for (std::size_t i = 0; i < saw.entries.size(); ++i) {
                out << fmt::format("{},{},{},{},{}\n", csv_cell(saw.entries[i].applicant_id),
                                   num(saw.entries[i].score), saw.entries[i].rank, num(topsis.entries[i].score),
                                   topsis.entries[i].rank);
            }
            break;
        case Format::Table:
            fmt::print(out, "{:<12} {:>9} {:>4}  {:>9} {:>4}\n", "applicant", "SAW", "rank", "TOPSIS", "rank");
            for (std::size_t i = 0; i < saw.entries.size(); ++i) {
                fmt::print(out, "{:<12} {:>9} {:>4}  {:>9} {:>4}\n", saw.entries[i].applicant_id,
                           num(saw.entries[i].score), saw.entries[i].rank, num(topsis.entries[i].score),
                           topsis.entries[i].rank);
            }
    }
    return kOk;
}

// evaluate ------------------------------------------------------------------

int cmd_evaluate(std::ostream& out, const Options& opts, const std::string& cohort_path,
                 const std::string& mapping_path, const std::string& requirement_path) {
    const auto c = load_cohort_inputs(cohort_path, mapping_path, requirement_path);
    const auto eval = evaluate_cohort(c.table, c.requirement, c.mapping, resolve_weights(c.table, weights_from(opts)));

    std::map<std::string, bool> eligible;
    for (const auto& s : eval.selection) eligible[s.applicant_id] = s.eligible;

    switch (opts.format) {
        case Format::Structured:
            for (std::size_t i = 0; i < eval.amm.entries.size(); ++i) {
                const auto& id = eval.amm.entries[i].applicant_id;
                out << json{{"record", "applicant"},
                            {"applicant", id},
                            {"human_rank", eval.human.ranks[i]},
                            {"amm_score", json_number(eval.amm.entries[i].score)},
                            {"amm_rank", eval.amm.entries[i].rank},
                            {"saw_score", json_number(eval.saw.entries[i].score)},
                            {"saw_rank", eval.saw.entries[i].rank},
                            {"topsis_score", json_number(eval.topsis.entries[i].score)},
                            {"topsis_rank", eval.topsis.entries[i].rank},
                            {"eligible", eligible.at(id)}}
                           .dump()
                    << '\n';
            }
            for (const auto& r : eval.correlations) {
                out << json{{"record", "correlation"}, {"method", r.method}, {"r", json_number(r.r)},
                            {"f", json_number(r.f)}, {"n", r.n}, {"critical_f", json_number(r.critical_f)},
                            {"significant", r.significant}}
                           .dump()
                    << '\n';
            }
            break;
        case Format::Csv:
            out << "applicant,human_rank,amm_score,amm_rank,saw_score,saw_rank,topsis_score,topsis_rank,eligible\n";
            for (std::size_t i = 0; i < eval.amm.entries.size(); ++i) {
                const auto& id = eval.amm.entries[i].applicant_id;
                out << fmt::format("{},{},{},{},{},{},{},{},{}\n", csv_cell(id), eval.human.ranks[i],
                                   num(eval.amm.entries[i].score), eval.amm.entries[i].rank,
                                   num(eval.saw.entries[i].score), eval.saw.entries[i].rank,
                                   num(eval.topsis.entries[i].score), eval.topsis.entries[i].rank,
                                   eligible.at(id) ? "yes" : "no");
            }
            out << "\nmethod,r,f,n,critical_f,significant\n";
            for (const auto& r : eval.correlations) {
                out << fmt::format("{},{},{},{},{},{}\n", r.method, num(r.r), num(r.f), r.n, num(r.critical_f),
                                   r.significant ? "yes" : "no");
            }
            break;
        case Format::Table:
            fmt::print(out, "{:<10} {:>5}  {:>9} {:>4}  {:>9} {:>4}  {:>9} {:>4}  {}\n", "applicant", "human",
                       "AMM", "rank", "SAW", "rank", "TOPSIS", "rank", "eligible");
            for (std::size_t i = 0; i < eval.amm.entries.size(); ++i) {
                const auto& id = eval.amm.entries[i].applicant_id;
                fmt::print(out, "{:<10} {:>5}  {:>9} {:>4}  {:>9} {:>4}  {:>9} {:>4}  {}\n", id,
                           eval.human.ranks[i], num(eval.amm.entries[i].score), eval.amm.entries[i].rank,
                           num(eval.saw.entries[i].score), eval.saw.entries[i].rank,
                           num(eval.topsis.entries[i].score), eval.topsis.entries[i].rank,
                           eligible.at(id) ? "yes" : "no");
            }
            fmt::print(out, "\n{:<8} {:>9} {:>10} {:>4} {:>10}  {}\n", "method", "r", "F", "n", "critical",
                       "significant");
            for (const auto& r : eval.correlations) {
                fmt::print(out, "{:<8} {:>9} {:>10} {:>4} {:>10}  {}\n", r.method, num(r.r), num(r.f), r.n,
                           num(r.critical_f), r.significant ? "yes" : "no");
            }
    }
    return kOk;
}

// demo ----------------------------------------------------------------------

int cmd_demo(std::ostream& out, const Options& opts, const std::string& data_dir) {
    const auto checks = run_reproduction_checks(FixturePaths::in(data_dir), weights_from(opts));
    bool all_passed = true;
    switch (opts.format) {
        case Format::Structured:
            for (const auto& c : checks) {
                out << json{{"record", "check"}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}.dump()
                    << '\n';
            }
            break;
        case Format::Csv:
            out << "check,passed,detail\n";
            for (const auto& c : checks) {
                out << fmt::format("{},{},{}\n", c.name, c.passed ? "yes" : "no", csv_cell(c.detail));
            }
            break;
        case Format::Table:
            for (const auto& c : checks) {
                fmt::print(out, "{} {:<20} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
            }
    }
    for (const auto& c : checks) all_passed = all_passed && c.passed;
    return all_passed ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-based applicant/programme matchmaking"};
    app.require_subcommand(1);

    Options opts;
    const std::map<std::string, Format> formats{
        {"table", Format::Table}, {"csv", Format::Csv}, {"structured", Format::Structured}};
    app.add_option("--format", opts.format, "Output format: table, csv or structured")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--output", opts.output, "Write output to PATH instead of stdout");

    std::string profile_path;
    std::string role_text = "requirement";
    auto* validate = app.add_subcommand("validate", "Check a profile file against the profile invariants");
    validate->add_option("profile", profile_path)->required();
    validate->add_option("--role", role_text, "requirement or skills")->check(CLI::IsMember({"requirement", "skills"}));

    std::string requirement_path;
    std::string skills_path;
    auto* match = app.add_subcommand("match", "Score a skills profile against a requisite profile");
    match->add_option("requirement", requirement_path)->required();
    match->add_option("skills", skills_path)->required();

    std::string cohort_path;
    std::string mapping_path;
    auto* rank = app.add_subcommand("rank", "Rank a cohort by matchmaking score");
    rank->add_option("requirement", requirement_path)->required();
    rank->add_option("cohort", cohort_path)->required();
    rank->add_option("mapping", mapping_path)->required();

    auto* baseline = app.add_subcommand("baseline", "Score a cohort with SAW and TOPSIS");
    baseline->add_option("cohort", cohort_path)->required();
    baseline->add_option("--weights", opts.weights, "Comma-separated criterion weights");

    auto* evaluate = app.add_subcommand("evaluate", "Compare AMM, SAW and TOPSIS against the human ranking");
    evaluate->add_option("cohort", cohort_path)->required();
    evaluate->add_option("mapping", mapping_path)->required();
    evaluate->add_option("requirement", requirement_path, "Overrides the mapping's requisite profile");
    evaluate->add_option("--weights", opts.weights, "Comma-separated criterion weights");

    std::string data_dir = MATCHMAKER_DATA_DIR;
    auto* demo = app.add_subcommand("demo", "Reproduce the bundled cohort study and grade each check");
    demo->add_option("--data", data_dir, "Directory holding the bundled fixtures");
    demo->add_option("--weights", opts.weights, "Comma-separated criterion weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kIoFailure;
    }

    std::ofstream file;
    if (!opts.output.empty()) {
        file.open(opts.output, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write '" << opts.output << "'\n";
            return kIoFailure;
        }
    }
    std::ostream& out = opts.output.empty() ? std::cout : file;

    try {
        if (*validate) {
            return cmd_validate(out, opts, profile_path,
                                role_text == "skills" ? ProfileRole::Skills : ProfileRole::Requirement);
        }
        if (*match) return cmd_match(out, opts, requirement_path, skills_path);
        if (*rank) return cmd_rank(out, opts, requirement_path, cohort_path, mapping_path);
        if (*baseline) return cmd_baseline(out, opts, cohort_path);
        if (*evaluate) return cmd_evaluate(out, opts, cohort_path, mapping_path, requirement_path);
        if (*demo) return cmd_demo(out, opts, data_dir);
    } catch (const Exit& e) {
        return e.code;
    } catch (const InputFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainFailure;
    }
    return kIoFailure;
}
