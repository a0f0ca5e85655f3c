#include "doctest.h"

#include "fixtures.hpp"
#include "matchmaker/evaluation.hpp"

#include <cmath>
#include <limits>

using namespace matchmaker;

namespace {

RankVector vec(std::vector<std::string> ids, std::vector<int> ranks) { return {std::move(ids), std::move(ranks)}; }

RankVector human() {
    RankVector v;
    for (const auto& r : fixtures::kCohort) {
        v.applicant_ids.emplace_back(r.id);
        v.ranks.push_back(r.human_rank);
    }
    return v;
}

RankVector published(int fixtures::PublishedRecord::*field) {
    RankVector v;
    for (const auto& r : fixtures::kPublished) {
        v.applicant_ids.emplace_back(r.id);
        v.ranks.push_back(r.*field);
    }
    return v;
}

// Direct Pearson over paired values, written out separately.
double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

ScoredRanking ranking_from(const RankVector& v) {
    ScoredRanking out{Method::AMM, {}};
    for (std::size_t i = 0; i < v.ranks.size(); ++i) {
        out.entries.push_back({v.applicant_ids[i], -static_cast<double>(v.ranks[i]), v.ranks[i]});
    }
    return out;
}

}  // namespace

TEST_CASE("identity and reversal") {
    auto a = vec({"a", "b", "c", "d"}, {1, 2, 3, 4});
    CHECK(rank_correlation(a, a) == doctest::Approx(1.0));
    auto rev = vec({"a", "b", "c", "d"}, {4, 3, 2, 1});
    CHECK(rank_correlation(a, rev) == doctest::Approx(-1.0));
}

TEST_CASE("alignment is by id, not position") {
    auto a = vec({"a", "b", "c", "d"}, {1, 2, 3, 4});
    auto shuffled = vec({"d", "b", "a", "c"}, {4, 2, 1, 3});
    CHECK(rank_correlation(a, shuffled) == doctest::Approx(1.0));
}

TEST_CASE("correlation errors") {
    auto a = vec({"a", "b", "c"}, {1, 2, 3});
    CHECK_THROWS_AS((void)rank_correlation(a, vec({"a", "b", "x"}, {1, 2, 3})), EvaluationError);
    CHECK_THROWS_AS((void)rank_correlation(a, vec({"a", "b"}, {1, 2})), EvaluationError);
    CHECK_THROWS_AS((void)rank_correlation(a, vec({"a", "b", "c"}, {1, 1, 1})), EvaluationError);
    CHECK_THROWS_AS((void)rank_correlation(a, vec({"a", "a", "c"}, {1, 2, 3})), EvaluationError);
}

TEST_CASE("published correlations against the human ranking") {
    const auto h = human();
    const auto amm = published(&fixtures::PublishedRecord::amm_rank);
    const auto saw = published(&fixtures::PublishedRecord::saw_rank);
    const auto topsis = published(&fixtures::PublishedRecord::topsis_rank);

    std::vector<double> hx, ax, sx, tx;
    for (std::size_t i = 0; i < fixtures::kCohort.size(); ++i) {
        hx.push_back(fixtures::kCohort[i].human_rank);
        ax.push_back(fixtures::kPublished[i].amm_rank);
        sx.push_back(fixtures::kPublished[i].saw_rank);
        tx.push_back(fixtures::kPublished[i].topsis_rank);
    }
    CHECK(rank_correlation(h, amm) == doctest::Approx(pearson(hx, ax)).epsilon(1e-12));
    CHECK(rank_correlation(h, saw) == doctest::Approx(pearson(hx, sx)).epsilon(1e-12));
    CHECK(rank_correlation(h, topsis) == doctest::Approx(pearson(hx, tx)).epsilon(1e-12));
    CHECK(std::abs(rank_correlation(h, amm) - 0.878) <= 0.01);
    CHECK(std::abs(rank_correlation(h, saw) - 0.259) <= 0.01);
    CHECK(std::abs(rank_correlation(h, topsis) - 0.133) <= 0.01);
}

TEST_CASE("regression F") {
    CHECK(regression_f(0.259, 25) == doctest::Approx(0.259 * 0.259 * 23 / (1 - 0.259 * 0.259)));
    CHECK(std::abs(regression_f(0.259, 25) - 1.654) < 0.001);
    CHECK(std::abs(regression_f(0.133, 25) - 0.414) < 0.001);
    CHECK(regression_f(0.0, 10) == 0.0);
    CHECK_THROWS_AS((void)regression_f(1.0, 25), EvaluationError);
    CHECK_THROWS_AS((void)regression_f(-1.0, 25), EvaluationError);
    CHECK_THROWS_AS((void)regression_f(0.5, 2), EvaluationError);
}

TEST_CASE("regression F is monotone in |r| and n") {
    for (int n = 3; n < 60; ++n) {
        double prev = -1;
        for (int k = 0; k < 99; ++k) {
            const double r = k / 100.0;
            const double f = regression_f(r, n);
            CHECK(f > prev);
            CHECK(regression_f(-r, n) == f);
            prev = f;
        }
        CHECK(regression_f(0.5, n + 1) > regression_f(0.5, n));
    }
}

TEST_CASE("correlation is symmetric and order invariant on random rankings") {
    fixtures::ProfileGenerator gen(83);
    for (int i = 0; i < 300; ++i) {
        const int n = gen.uniform(3, 30);
        std::vector<std::string> ids;
        std::vector<double> sa, sb;
        for (int k = 0; k < n; ++k) {
            ids.push_back("id" + std::to_string(k));
            sa.push_back(gen.uniform(0, 10));
            sb.push_back(gen.uniform(0, 10));
        }
        RankVector a{ids, competition_ranks(sa)};
        RankVector b{ids, competition_ranks(sb)};
        const bool flat_a = std::all_of(a.ranks.begin(), a.ranks.end(), [&](int r) { return r == a.ranks[0]; });
        const bool flat_b = std::all_of(b.ranks.begin(), b.ranks.end(), [&](int r) { return r == b.ranks[0]; });
        if (flat_a || flat_b) continue;
        const double r = rank_correlation(a, b);
        CHECK(r >= -1.0);
        CHECK(r <= 1.0);
        CHECK(rank_correlation(b, a) == doctest::Approx(r).epsilon(1e-12));
        std::vector<std::size_t> perm(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        gen.shuffle(perm);
        RankVector p;
        for (auto k : perm) {
            p.applicant_ids.push_back(b.applicant_ids[k]);
            p.ranks.push_back(b.ranks[k]);
        }
        CHECK(rank_correlation(a, p) == doctest::Approx(r).epsilon(1e-12));
    }
}

TEST_CASE("compare_methods reports per system") {
    const auto h = human();
    std::vector<ScoredRanking> systems{ranking_from(published(&fixtures::PublishedRecord::amm_rank)),
                                       ranking_from(published(&fixtures::PublishedRecord::saw_rank)),
                                       ranking_from(published(&fixtures::PublishedRecord::topsis_rank))};
    systems[1].method = Method::SAW;
    systems[2].method = Method::TOPSIS;
    auto reports = compare_methods(h, systems);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].method == "AMM");
    CHECK(reports[1].method == "SAW");
    CHECK(reports[0].significant);
    CHECK_FALSE(reports[1].significant);
    CHECK_FALSE(reports[2].significant);
    for (const auto& rep : reports) {
        CHECK(rep.n == 25);
        CHECK(rep.critical_f == kCriticalF);
        CHECK(std::abs(rep.f - rep.r * rep.r * 23 / (1 - rep.r * rep.r)) <= 1e-6);
    }
}

TEST_CASE("a system identical to the human ranking") {
    const auto h = human();
    auto reports = compare_methods(h, {ranking_from(h)});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].r == 1.0);
    CHECK(std::isinf(reports[0].f));
    CHECK(reports[0].significant);
}

TEST_CASE("RankVector from a ranking") {
    ScoredRanking s{Method::SAW, {{"x", 0.5, 2}, {"y", 0.9, 1}}};
    auto v = RankVector::from(s);
    CHECK(v.applicant_ids == std::vector<std::string>{"x", "y"});
    CHECK(v.ranks == std::vector<int>{2, 1});
}
