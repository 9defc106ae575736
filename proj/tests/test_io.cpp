#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "wordlecast/io.hpp"
#include "wordlecast/svg.hpp"

using namespace wordlecast;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("arimax model survives a json round trip", "[io]") {
    timeseries::ArimaxModel m;
    m.order = {2, 1, 1};
    m.ar_coeffs = {0.51234567891234, -0.2};
    m.ma_coeffs = {0.3};
    m.intercept = 12000.52;
    m.weekend_factor = 0.0459;
    m.residual_variance = 123.456;
    m.css = 99.75;
    m.train_start_day = 27;
    m.train_end_day = 329;
    m.unstable_ar = true;

    const auto j = io::arimax_to_json(m);
    const auto r = io::arimax_from_json(j);
    CHECK(r.order.p == 2);
    CHECK(r.order.d == 1);
    CHECK(r.order.q == 1);
    CHECK(r.ar_coeffs == m.ar_coeffs);
    CHECK(r.ma_coeffs == m.ma_coeffs);
    CHECK(r.intercept == m.intercept);
    CHECK(r.weekend_factor == m.weekend_factor);
    CHECK(r.residual_variance == m.residual_variance);
    CHECK(r.css == m.css);
    CHECK(r.train_start_day == m.train_start_day);
    CHECK(r.train_end_day == m.train_end_day);
    CHECK(r.unstable_ar == m.unstable_ar);

    auto bad = j;
    bad["ar_coeffs"] = std::vector<double>{0.5};
    CHECK_THROWS_AS(io::arimax_from_json(bad), ParseError);
    bad = j;
    bad.erase("intercept");
    CHECK_THROWS_AS(io::arimax_from_json(bad), ParseError);
}

TEST_CASE("word model survives a json round trip", "[io]") {
    io::WordModel wm;
    wm.mlp = neural::init_mlp({11, 8, 7}, 99);
    wm.mlp.epochs_trained = 55;
    wm.scaling.min.assign(11, 0.25);
    wm.scaling.max.assign(11, 4.5);
    wm.freq = words::build_letter_frequency({"eerie", "aback"});
    wm.feature_set = words::FeatureSet::Table3Only11;

    const auto j = io::word_model_to_json(wm);
    const auto r = io::word_model_from_json(j);
    CHECK(r.mlp.layer_sizes == wm.mlp.layer_sizes);
    CHECK(r.mlp.weights == wm.mlp.weights);
    CHECK(r.mlp.biases == wm.mlp.biases);
    CHECK(r.mlp.seed == wm.mlp.seed);
    CHECK(r.mlp.epochs_trained == 55);
    CHECK(r.scaling.min == wm.scaling.min);
    CHECK(r.scaling.max == wm.scaling.max);
    CHECK(r.freq.freq == wm.freq.freq);
    CHECK(r.feature_set == words::FeatureSet::Table3Only11);

    auto bad = j;
    bad["feature_set"] = "everything";
    CHECK_THROWS_AS(io::word_model_from_json(bad), ParseError);
    bad = j;
    bad["letter_freq"] = std::vector<double>{1.0, 2.0};
    CHECK_THROWS_AS(io::word_model_from_json(bad), ParseError);
    bad = j;
    bad["layers"] = nlohmann::json::array();
    CHECK_THROWS_AS(io::word_model_from_json(bad), ParseError);
}

TEST_CASE("difficulty model survives a json round trip", "[io]") {
    const auto m = difficulty::kmeans_1d({1, 2, 8, 9, 20}, 3);
    const auto r = io::difficulty_from_json(io::difficulty_to_json(m));
    CHECK(r.k == m.k);
    CHECK(r.centroids == m.centroids);
    CHECK(r.assignments == m.assignments);
    CHECK(r.mean_silhouette == m.mean_silhouette);
    CHECK(r.wcss == m.wcss);

    auto bad = io::difficulty_to_json(m);
    bad["centroids"] = std::vector<double>{1.0};
    CHECK_THROWS_AS(io::difficulty_from_json(bad), ParseError);
}

TEST_CASE("cleaning report serializes every category", "[io]") {
    CleaningReport rep;
    rep.word_fixes.push_back({parse_date("2022-03-15"), "tash", "trash"});
    rep.outlier_fixes.push_back({parse_date("2022-11-30"), 2569, 27500});
    rep.boundary_flags.push_back({parse_date("2022-12-01"), 20000});

    const auto j = io::cleaning_report_to_json(rep);
    REQUIRE(j.at("word_fixes").size() == 1);
    CHECK(j["word_fixes"][0]["date"] == "2022-03-15");
    CHECK(j["word_fixes"][0]["from"] == "tash");
    CHECK(j["word_fixes"][0]["to"] == "trash");
    REQUIRE(j.at("outlier_fixes").size() == 1);
    CHECK(j["outlier_fixes"][0]["original"] == 2569);
    CHECK(j["outlier_fixes"][0]["replaced_with"] == 27500);
    REQUIRE(j.at("boundary_flags").size() == 1);
    CHECK(j["boundary_flags"][0]["reported_results"] == 20000);
}

TEST_CASE("json files round trip and fail loudly", "[io]") {
    fixtures::TempDir dir("io");
    const auto path = dir.file("blob.json");
    io::save_json_file(path, nlohmann::json{{"alpha", 1.5}, {"beta", "two"}});
    const auto j = io::load_json_file(path);
    CHECK(j["alpha"] == 1.5);
    CHECK(j["beta"] == "two");

    write_text_file(path, "{not json");
    CHECK_THROWS_WITH(io::load_json_file(path), ContainsSubstring("blob.json"));
    CHECK_THROWS_AS(io::load_json_file(dir.file("absent.json")), IoError);
}

TEST_CASE("diagnostics csv lists one row per lag", "[io]") {
    timeseries::DiagnosticsReport rep;
    rep.acf = {1.0, 0.5, 0.25};
    rep.pacf = {0.5, -0.1};
    rep.band_halfwidth = 0.2;

    const auto csv = io::diagnostics_csv(rep);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "lag,acf,pacf,band");
    CHECK(lines[1] == "0,1,1,0.2");
    CHECK(lines[2] == "1,0.5,0.5,0.2");
    CHECK(lines[3] == "2,0.25,-0.1,0.2");
}

TEST_CASE("letter frequency csv covers the alphabet", "[io]") {
    const auto table = words::build_letter_frequency({"aback"});
    const auto lines = split_lines(io::letter_frequency_csv(table));
    REQUIRE(lines.size() == 27);
    CHECK(lines[0] == "letter,frequency");
    CHECK(lines[1] == "a,0.4");
    CHECK(lines[26] == "z,0");
}

TEST_CASE("selection and summary csv shapes", "[io]") {
    difficulty::KSelection sel;
    sel.best_k = 3;
    sel.scores = {{2, 0.41}, {3, 0.62}, {4, 0.55}};
    const auto lines = split_lines(io::silhouette_scores_csv(sel));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "k,mean_silhouette");
    CHECK(lines[2] == "3,0.62");

    difficulty::LevelSummaryReport rep;
    difficulty::LevelSummary s;
    s.level = 1;
    s.word_count = 3;
    s.mean_avg_tries = 3.5;
    rep.levels.push_back(s);
    const auto sum_lines = split_lines(io::level_summary_csv(rep));
    REQUIRE(sum_lines.size() == 2);
    CHECK_THAT(sum_lines[0], ContainsSubstring("mean_pos_code"));
    CHECK_THAT(sum_lines[1], ContainsSubstring("1,3,3.5"));
}

TEST_CASE("line chart emits well-formed svg", "[io][svg]") {
    svg::LineSeries a{"observed & raw", "#1f77b4", {{0, 1}, {1, 2}, {2, 1.5}}};
    svg::LineSeries b{"fit<1>", "#ff7f0e", {{0, 1.2}, {2, 1.4}}};
    const auto doc = svg::line_chart("reported totals", "day", "players", {a, b});

    CHECK_THAT(doc, ContainsSubstring("<svg"));
    CHECK_THAT(doc, ContainsSubstring("</svg>"));
    CHECK_THAT(doc, ContainsSubstring("reported totals"));
    CHECK_THAT(doc, ContainsSubstring("observed &amp; raw"));
    CHECK_THAT(doc, ContainsSubstring("fit&lt;1&gt;"));
    CHECK_THAT(doc, ContainsSubstring("<polyline"));

    CHECK_THROWS_AS(svg::line_chart("t", "x", "y", {}), std::invalid_argument);
    // constant series must not divide by zero
    svg::LineSeries flat{"flat", "#000", {{0, 5}, {1, 5}}};
    CHECK_THAT(svg::line_chart("t", "x", "y", {flat}), ContainsSubstring("</svg>"));
}

TEST_CASE("pie chart emits wedges and legend", "[io][svg]") {
    const std::vector<svg::PieSlice> slices{
        {"level 1", 30.0, "#1f77b4"}, {"level 2", 50.0, "#ff7f0e"}, {"level 3", 20.0, "#2ca02c"}};
    const auto doc = svg::pie_chart("levels", slices);
    CHECK_THAT(doc, ContainsSubstring("<svg"));
    CHECK_THAT(doc, ContainsSubstring("</svg>"));
    CHECK_THAT(doc, ContainsSubstring("<path"));
    CHECK_THAT(doc, ContainsSubstring("level 2: 50%"));

    // a lone slice degenerates to a full circle
    CHECK_THAT(svg::pie_chart("one", {{"all", 7.0, "#111"}}), ContainsSubstring("<circle"));

    CHECK_THROWS_AS(svg::pie_chart("bad", {{"neg", -1.0, "#111"}}), std::invalid_argument);
    CHECK_THROWS_AS(svg::pie_chart("bad", {{"zero", 0.0, "#111"}}), std::invalid_argument);
}

TEST_CASE("palette cycles deterministically", "[io][svg]") {
    CHECK(svg::palette_color(0) == svg::palette_color(10));
    CHECK(svg::palette_color(3) == svg::palette_color(13));
    CHECK(svg::palette_color(0) != svg::palette_color(1));
}
