#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <vector>

#include "support/fixtures.hpp"
#include "wordlecast/difficulty.hpp"
#include "wordlecast/rng.hpp"

using namespace wordlecast;
using namespace wordlecast::difficulty;

TEST_CASE("avg_tries weights buckets 1..7", "[difficulty]") {
    CHECK(avg_tries({0, 0, 100, 0, 0, 0, 0}) == 3.0);
    CHECK(avg_tries({50, 0, 0, 0, 0, 0, 50}) == Catch::Approx(4.0));
    // normalization is implicit, any positive scale works
    CHECK(avg_tries({1, 1, 1, 1, 1, 1, 1}) == Catch::Approx(4.0));
    CHECK(avg_tries({2, 14, 48, 66, 44, 20, 6}) ==
          Catch::Approx(avg_tries({1, 7, 24, 33, 22, 10, 3})));

    CHECK_THROWS_AS(avg_tries({-1, 0, 0, 0, 0, 0, 101}), std::invalid_argument);
    CHECK_THROWS_AS(avg_tries({0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("two well-separated groups split exactly", "[difficulty][kmeans]") {
    const std::vector<double> values{1, 1, 1, 10, 10, 10};
    const auto model = kmeans_1d(values, 2);
    REQUIRE(model.k == 2);
    REQUIRE(model.centroids.size() == 2);
    CHECK(model.centroids[0] == Catch::Approx(1.0));
    CHECK(model.centroids[1] == Catch::Approx(10.0));
    CHECK(model.assignments == (std::vector<int>{1, 1, 1, 2, 2, 2}));
    CHECK(model.wcss == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("three clusters land on segment means", "[difficulty][kmeans]") {
    const std::vector<double> values{1, 2, 8, 9, 20};
    const auto model = kmeans_1d(values, 3);
    CHECK(model.centroids[0] == Catch::Approx(1.5));
    CHECK(model.centroids[1] == Catch::Approx(8.5));
    CHECK(model.centroids[2] == Catch::Approx(20.0));
    CHECK(model.assignments == (std::vector<int>{1, 1, 2, 2, 3}));
    CHECK(model.wcss == Catch::Approx(fixtures::exhaustive_min_wcss(values, 3)));
    CHECK(model.wcss == Catch::Approx(1.0));
}

TEST_CASE("kmeans input validation", "[difficulty][kmeans]") {
    CHECK_THROWS_AS(kmeans_1d({1, 2, 3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(kmeans_1d({5, 5, 5}, 2), std::invalid_argument);
    CHECK_THROWS_AS(kmeans_1d({}, 2), std::invalid_argument);
    CHECK_THROWS_AS(kmeans_1d({1.0, std::nan("")}, 2), std::invalid_argument);
}

TEST_CASE("wcss trace never increases and ends at the reported wcss", "[difficulty][kmeans]") {
    Rng rng(41);
    std::vector<double> values;
    for (int i = 0; i < 60; ++i) values.push_back(rng.uniform(0.0, 10.0));
    const auto model = kmeans_1d(values, 4);
    REQUIRE_FALSE(model.wcss_trace.empty());
    for (std::size_t i = 1; i < model.wcss_trace.size(); ++i) {
        CHECK(model.wcss_trace[i] <= model.wcss_trace[i - 1] + 1e-9);
    }
    CHECK(model.wcss_trace.back() == Catch::Approx(model.wcss));
}

TEST_CASE("levels are ordered with the values", "[difficulty][kmeans]") {
    Rng rng(42);
    std::vector<double> values;
    for (int i = 0; i < 80; ++i) values.push_back(rng.uniform(0.0, 6.0));
    const auto model = kmeans_1d(values, 5);
    for (int j = 0; j + 1 < model.k; ++j) {
        CHECK(model.centroids[static_cast<std::size_t>(j)] <
              model.centroids[static_cast<std::size_t>(j + 1)]);
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[i] < values[j]) CHECK(model.assignments[i] <= model.assignments[j]);
        }
    }
}

TEST_CASE("kmeans matches the exhaustive optimum on small instances", "[difficulty][kmeans]") {
    for (unsigned long long seed = 1; seed <= 50; ++seed) {
        Rng rng(seed);
        const std::size_t n = 4 + rng.index(9);
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(rng.uniform(0.0, 100.0));
        for (int k = 2; k <= 3; ++k) {
            const auto model = kmeans_1d(values, k);
            const double best = fixtures::exhaustive_min_wcss(values, k);
            INFO("seed " << seed << " n " << n << " k " << k);
            CHECK(model.wcss == Catch::Approx(best).margin(1e-9));
        }
    }
}

TEST_CASE("kmeans is deterministic", "[difficulty][kmeans]") {
    Rng rng(43);
    std::vector<double> values;
    for (int i = 0; i < 50; ++i) values.push_back(rng.uniform(3.0, 6.0));
    const auto a = kmeans_1d(values, 5);
    const auto b = kmeans_1d(values, 5);
    CHECK(a.centroids == b.centroids);
    CHECK(a.assignments == b.assignments);
    CHECK(a.wcss == b.wcss);
}

TEST_CASE("silhouette matches a hand computation", "[difficulty][silhouette]") {
    const std::vector<double> values{0, 1, 10, 11};
    const std::vector<int> assign{1, 1, 2, 2};
    const auto rep = silhouette(values, assign);
    REQUIRE(rep.per_point.size() == 4);
    CHECK(rep.per_point[0] == Catch::Approx((10.5 - 1.0) / 10.5));
    CHECK(rep.per_point[1] == Catch::Approx((9.5 - 1.0) / 9.5));
    CHECK(rep.per_point[2] == Catch::Approx((9.5 - 1.0) / 9.5));
    CHECK(rep.per_point[3] == Catch::Approx((10.5 - 1.0) / 10.5));
    CHECK(rep.mean == Catch::Approx((2.0 * 9.5 / 10.5 + 2.0 * 8.5 / 9.5) / 4.0));
}

TEST_CASE("silhouette edge behavior", "[difficulty][silhouette]") {
    // singletons score zero
    const auto rep = silhouette({0, 1, 10}, {1, 1, 2});
    CHECK(rep.per_point[2] == 0.0);

    // a misassigned point goes negative
    const auto bad = silhouette({0.0, 10.0, 10.1}, {1, 2, 1});
    CHECK(bad.per_point[0] < 0.0);

    // every score stays in [-1, 1]
    Rng rng(44);
    std::vector<double> values;
    std::vector<int> assign;
    for (int i = 0; i < 40; ++i) {
        values.push_back(rng.uniform(0.0, 1.0));
        assign.push_back(1 + static_cast<int>(rng.index(3)));
    }
    for (double s : silhouette(values, assign).per_point) {
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
    }

    CHECK_THROWS_AS(silhouette({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(silhouette({1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(silhouette({1, 2}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(silhouette({1, 2, 3}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("select_k recovers three blobs", "[difficulty][selectk]") {
    Rng rng(45);
    std::vector<double> values;
    for (double center : {1.0, 5.0, 9.0}) {
        for (int i = 0; i < 10; ++i) values.push_back(center + rng.uniform(-0.05, 0.05));
    }
    const auto sel = select_k(values, 2, 6);
    CHECK(sel.best_k == 3);
    REQUIRE(sel.scores.size() == 5);

    // reported winner is the smallest k attaining the maximum score
    int expect = 0;
    double best = -2.0;
    for (const auto& [k, score] : sel.scores) {
        if (score > best) {
            best = score;
            expect = k;
        }
    }
    CHECK(sel.best_k == expect);
}

TEST_CASE("select_k bounds", "[difficulty][selectk]") {
    const std::vector<double> values{1, 2, 8, 9, 20, 21};
    const auto sel = select_k(values, 2, 2);
    CHECK(sel.best_k == 2);
    CHECK(sel.scores.size() == 1);
    CHECK_THROWS_AS(select_k(values, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(select_k(values, 4, 3), std::invalid_argument);
}

TEST_CASE("classify picks the nearest level, ties upward", "[difficulty]") {
    DifficultyModel model;
    model.k = 3;
    model.centroids = {1.0, 3.0, 5.0};
    CHECK(classify(0.2, model) == 1);
    CHECK(classify(1.0, model) == 1);
    CHECK(classify(3.0, model) == 2);
    CHECK(classify(5.0, model) == 3);
    CHECK(classify(99.0, model) == 3);
    CHECK(classify(2.0, model) == 2);
    CHECK(classify(4.0, model) == 3);

    CHECK_THROWS_AS(classify(std::nan(""), model), std::invalid_argument);
    CHECK_THROWS_AS(classify(3.0, DifficultyModel{}), std::invalid_argument);
}

TEST_CASE("level summary averages features per level", "[difficulty]") {
    const auto freq = words::build_letter_frequency({"eerie", "aback", "slump"});
    const auto lex = words::PosLexicon::embedded();
    std::vector<words::WordFeatures> feats(3);
    feats[0] = words::extract_features("eerie", 1, freq, lex);
    feats[1] = words::extract_features("aback", 2, freq, lex);
    feats[2] = words::extract_features("slump", 3, freq, lex);
    const std::vector<double> tries{4.8, 4.0, 3.6};
    const std::vector<int> assign{2, 2, 1};

    const auto rep = level_summary(feats, tries, assign, 3);
    REQUIRE(rep.levels.size() == 2);
    CHECK(rep.omitted_levels == (std::vector<int>{3}));

    CHECK(rep.levels[0].level == 1);
    CHECK(rep.levels[0].word_count == 1);
    CHECK(rep.levels[0].mean_avg_tries == Catch::Approx(3.6));
    CHECK(rep.levels[0].mean_unique_count == Catch::Approx(feats[2].unique_count));

    CHECK(rep.levels[1].level == 2);
    CHECK(rep.levels[1].word_count == 2);
    CHECK(rep.levels[1].mean_avg_tries == Catch::Approx(4.4));
    CHECK(rep.levels[1].mean_unique_count ==
          Catch::Approx((feats[0].unique_count + feats[1].unique_count) / 2.0));
    CHECK(rep.levels[1].mean_has_double ==
          Catch::Approx((feats[0].has_double + feats[1].has_double) / 2.0));

    CHECK_THROWS_AS(level_summary(feats, tries, {1, 2}, 2), std::invalid_argument);
}
