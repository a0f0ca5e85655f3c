#pragma once

// Shared test data: the 25-applicant cohort, the published comparison
// table, profile generators, and a direct-from-formula scoring oracle that
// bypasses the preprocessing code path.

#include "matchmaker/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

struct CohortRecord {
    const char* id;
    std::array<double, 6> marks;
    int human_rank;
    bool selected;
};

inline const std::vector<CohortRecord> kCohort{
    {"001", {47, 72, 68, 84, 75, 87}, 23, false}, {"002", {48, 80, 66, 71, 85, 64}, 22, false},
    {"003", {49, 87, 70, 65, 86, 46}, 21, false}, {"004", {68, 67, 62, 75, 69, 49}, 1, true},
    {"005", {59, 66, 68, 73, 69, 53}, 2, true},   {"006", {59, 66, 55, 89, 73, 46}, 2, true},
    {"007", {45, 64, 64, 70, 76, 67}, 24, false}, {"008", {52, 69, 65, 67, 68, 61}, 4, true},
    {"009", {68, 58, 52, 71, 63, 68}, 5, true},   {"010", {70, 71, 58, 67, 67, 46}, 6, true},
    {"011", {53, 71, 64, 69, 74, 47}, 7, true},   {"012", {67, 80, 65, 51, 58, 57}, 7, true},
    {"013", {52, 69, 66, 71, 73, 46}, 9, true},   {"014", {53, 64, 46, 78, 56, 77}, 10, true},
    {"015", {57, 62, 49, 80, 75, 50}, 11, true},  {"016", {60, 63, 52, 93, 59, 46}, 11, true},
    {"017", {57, 74, 59, 74, 65, 44}, 11, true},  {"018", {67, 69, 45, 66, 70, 55}, 14, true},
    {"019", {55, 78, 59, 70, 72, 38}, 14, true},  {"020", {67, 62, 60, 67, 60, 55}, 16, true},
    {"021", {62, 76, 65, 42, 42, 77}, 17, true},  {"022", {55, 74, 53, 71, 65, 44}, 18, true},
    {"023", {69, 60, 56, 66, 51, 60}, 19, true},  {"024", {50, 75, 50, 74, 63, 49}, 19, true},
    {"025", {45, 71, 60, 67, 75, 40}, 25, false},
};

struct PublishedRecord {
    const char* id;
    double saw;
    int saw_rank;
    double topsis;
    int topsis_rank;
    double amm;
    int amm_rank;
};

inline const std::vector<PublishedRecord> kPublished{
    {"001", 0.86182, 1, 0.66258, 1, 0.40527, 23},  {"002", 0.83560, 2, 0.58544, 2, 0.40605, 22},
    {"003", 0.82415, 3, 0.51397, 4, 0.40794, 21},  {"004", 0.80697, 4, 0.50852, 5, 0.62836, 1},
    {"005", 0.79548, 6, 0.49331, 9, 0.61116, 4},   {"006", 0.78834, 8, 0.49338, 8, 0.61116, 4},
    {"007", 0.77382, 11, 0.49980, 7, 0.35246, 24}, {"008", 0.77832, 10, 0.48230, 11, 0.59628, 9},
    {"009", 0.78069, 9, 0.51915, 3, 0.60133, 7},   {"010", 0.79174, 7, 0.47520, 14, 0.61781, 3},
    {"011", 0.77318, 12, 0.44560, 19, 0.59546, 10}, {"012", 0.79632, 5, 0.48423, 10, 0.62114, 2},
    {"013", 0.76977, 15, 0.43898, 20, 0.58934, 13}, {"014", 0.75337, 22, 0.50752, 6, 0.57848, 16},
    {"015", 0.75644, 20, 0.45481, 17, 0.58048, 15}, {"016", 0.75990, 19, 0.45629, 16, 0.58678, 14},
    {"017", 0.76799, 16, 0.43388, 21, 0.59762, 8},  {"018", 0.76985, 14, 0.47535, 13, 0.60164, 6},
    {"019", 0.76688, 17, 0.42599, 22, 0.45626, 20}, {"020", 0.77007, 13, 0.45710, 15, 0.59209, 11},
    {"021", 0.76490, 18, 0.47683, 12, 0.59047, 12}, {"022", 0.74458, 23, 0.39796, 24, 0.57822, 17},
    {"023", 0.75393, 21, 0.44709, 18, 0.57822, 17}, {"024", 0.73614, 24, 0.40134, 23, 0.57182, 19},
    {"025", 0.72821, 25, 0.37760, 25, 0.34079, 25},
};

inline const std::vector<double> kWeights{0.20, 0.20, 0.15, 0.15, 0.15, 0.15};

inline constexpr const char* kSixSubjectRequirement =
    "<Compulsory_Subject::count,2,No,1>\n"
    "<Optional_Subject::count,>=3,No,1>\n"
    "<Compulsory_Subject::Mathematics,50...100,No,1>\n"
    "<Compulsory_Subject::English_Language,50...100,No,1>\n"
    "<Optional_Subject::Sub3,40...100,No,1>\n"
    "<Optional_Subject::Sub4,40...100,No,1>\n"
    "<Optional_Subject::Sub5,40...100,No,1>\n"
    "<Optional_Subject::Sub6,40...100,No,1>\n";

inline const char* const kSixSubjectNames[6] = {"Mathematics", "English_Language", "Sub3",
                                                "Sub4",        "Sub5",             "Sub6"};

inline std::string skills_text(const std::array<double, 6>& marks) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        out += "<" + std::string(kSixSubjectNames[i]) + "," + std::to_string(static_cast<int>(marks[i])) +
               ",No,1>\n";
    }
    return out;
}

inline constexpr const char* kTextbox3 =
    "<Compulsory_Subject::count,2,No,1>\n"
    "<Optional_Subject::count,>=3,No,1>\n"
    "<Compulsory_Subject::English_Language,50...100,No,1>\n"
    "<Compulsory_Subject::Mathematics,50...100,No,1>\n"
    "<Programme,National Diploma Information Technology,No,1>\n"
    "<Programme_Intake,January,No,1>\n"
    "<Programme_Type,Full-time,No,1>\n"
    "<Optional_Subject::Accounting,40...100,No,1>\n"
    "<Optional_Subject::Afrikaans,40...100,No,1>\n"
    "<Optional_Subject::Business_Studies,40...100,No,1>\n"
    "<Optional_Subject::Economics,40...100,No,1>\n"
    "<Optional_Subject::Geographic,40...100,No,1>\n"
    "<Optional_Subject::Information_Technology,40...100,No,1>\n"
    "<Optional_Subject::IsiZulu,40...100,No,1>\n"
    "<Optional_Subject::Physical_Sciences,40...100,No,1>\n"
    "<Optional_Subject::Venda,40...100,No,1>\n"
    "<Residence,{ On Campus, Off Campus },No,1>\n"
    "<Scholarship, Yes, No,1>\n"
    "<Skills, {Web 2.0 Technology, Computer Programming},No,1>\n";

inline constexpr const char* kTextbox4 =
    "<Programme, National Diploma Information Technology,No,1>\n"
    "<Programme_Intake,January,No,1>\n"
    "<Programme_Type, full-time, No, 1>\n"
    "<Residence, On Campus,No,1>\n"
    "<Scholarship, Yes,No,1>\n"
    "<Afrikaans,54,No,1>\n"
    "<English_Language,56,No,1>\n"
    "<Geographic,50,No,1>\n"
    "<Economics,62,No,1>\n"
    "<IsiZulu,69,No,1>\n"
    "<Life_Sciences,33,No,1>\n"
    "<Mathematics,65,No,1>\n"
    "<Physical_Sciences,64,No,1>\n"
    "<Skills, Computer Programming,No,1>\n";

// Scoring oracle written straight from the formulas over raw marks: two
// compulsory members at 50...100 (S=2), four optional at 40...100 (S=3).
inline double bounded_similarity(double x, double y) { return 1.0 - std::abs(x - y) / (1.0 + x + y); }

inline double category_factor(const double* marks, int count, int required, double floor) {
    double sum = 0.0;
    int met = 0;
    for (int i = 0; i < count; ++i) {
        sum += marks[i];
        if (marks[i] >= floor && marks[i] <= 100.0) ++met;
    }
    const double target = static_cast<double>(required) / count * (100.0 * count);
    const double held = static_cast<double>(std::min(required, met)) / std::max(required, count) * sum;
    return bounded_similarity(held, target);
}

inline double oracle_six_subject_score(const std::array<double, 6>& marks) {
    return category_factor(marks.data(), 2, 2, 50.0) * category_factor(marks.data() + 2, 4, 3, 40.0);
}

// Random profile generator for round-trip and invariance properties.
class ProfileGenerator {
public:
    explicit ProfileGenerator(unsigned seed) : rng_(seed) {}

    std::string word() {
        static constexpr const char* kSyllables[] = {"ka", "lo", "mi", "zu", "te", "ra", "ne", "so", "vi"};
        std::string out;
        const int n = uniform(2, 4);
        for (int i = 0; i < n; ++i) out += kSyllables[uniform(0, 8)];
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
        return out;
    }

    std::string phrase() {
        std::string out = word();
        if (uniform(0, 2) == 0) out += " " + word();
        if (uniform(0, 3) == 0) out += " 2.0";
        return out;
    }

    double number() {
        // mix of integers and short decimals
        if (uniform(0, 1) == 0) return uniform(0, 100);
        return uniform(0, 10000) / 100.0;
    }

    matchmaker::AttributeValue value() {
        switch (uniform(0, 3)) {
            case 0: return matchmaker::Number{number()};
            case 1: {
                double a = number();
                double b = number();
                if (a > b) std::swap(a, b);
                return matchmaker::Range{a, b};
            }
            case 2: {
                matchmaker::TextSet set;
                const int n = uniform(1, 4);
                for (int i = 0; i < n; ++i) {
                    auto member = phrase();
                    if (!set.contains(member)) set.members.push_back(member);
                }
                return set;
            }
            default: return matchmaker::Text{phrase()};
        }
    }

    double priority() {
        static constexpr double kChoices[] = {0.0, 0.25, 0.5, 0.75, 1.0, 0.125};
        return kChoices[uniform(0, 5)];
    }

    // A valid requisite profile with 0..3 categories (each with a count) and
    // 0..5 uncategorized constraints; category members share a kind.
    matchmaker::Profile requirement() {
        using namespace matchmaker;
        Profile p{ProfileRole::Requirement, {}};
        int next = 0;
        auto fresh = [&]() { return word() + std::to_string(next++); };

        const int categories = uniform(0, 3);
        for (int c = 0; c < categories; ++c) {
            const auto category = "Cat" + fresh();
            const int members = uniform(1, 5);
            const bool numeric = uniform(0, 3) != 0;
            const long long required = uniform(1, members);
            if (uniform(0, 1) == 0) {
                p.constraints.push_back({AttributeName(category, "count"), AtLeast{required}, Flexibility::Hard, 1.0});
            } else {
                p.constraints.push_back({AttributeName(category, "count"), Number{static_cast<double>(required)},
                                         Flexibility::Hard, 1.0});
            }
            for (int m = 0; m < members; ++m) {
                AttributeValue v;
                if (numeric) {
                    const double lo = uniform(0, 60);
                    v = Range{lo, lo + uniform(0, 40)};
                } else {
                    v = TextSet{{phrase() + "x", phrase() + "y"}};
                }
                p.constraints.push_back({AttributeName(category, fresh()), v, flex(), priority()});
            }
        }
        const int plain = uniform(0, 5);
        for (int i = 0; i < plain; ++i) p.constraints.push_back({AttributeName(fresh()), value(), flex(), priority()});
        shuffle(p.constraints);
        return p;
    }

    // A skills profile answering some of `requirement`'s attributes.
    matchmaker::Profile skills_for(const matchmaker::Profile& requirement) {
        using namespace matchmaker;
        Profile p{ProfileRole::Skills, {}};
        for (const auto& c : requirement.constraints) {
            if (c.attribute.is_count() || uniform(0, 4) == 0) continue;
            AttributeValue v;
            if (is_numeric(c.value)) {
                v = Number{static_cast<double>(uniform(0, 100))};
            } else if (const auto* set = std::get_if<TextSet>(&c.value); set && uniform(0, 1) == 0) {
                v = Text{set->members[uniform(0, static_cast<int>(set->members.size()) - 1)]};
            } else if (const auto* text = std::get_if<Text>(&c.value); text && uniform(0, 1) == 0) {
                v = *text;
            } else {
                v = Text{phrase()};
            }
            p.constraints.push_back({AttributeName(c.attribute.name()), v, Flexibility::Hard, 1.0});
        }
        shuffle(p.constraints);
        return p;
    }

    matchmaker::Flexibility flex() {
        return uniform(0, 1) == 0 ? matchmaker::Flexibility::Hard : matchmaker::Flexibility::Soft;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), rng_);
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace fixtures
