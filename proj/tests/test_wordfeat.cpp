#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "wordlecast/wordfeat.hpp"

using namespace wordlecast;
using namespace wordlecast::words;

TEST_CASE("word validation", "[wordfeat]") {
    CHECK_NOTHROW(validate_word("eerie"));
    CHECK_THROWS_AS(validate_word("EERIE"), std::invalid_argument);
    CHECK_THROWS_AS(validate_word("abcd"), std::invalid_argument);
    CHECK_THROWS_AS(validate_word("abcdef"), std::invalid_argument);
    CHECK_THROWS_AS(validate_word("ab de"), std::invalid_argument);
    CHECK_THROWS_AS(validate_word("na\xC3\xAFve"), std::invalid_argument);
    CHECK_THROWS_AS(validate_word(""), std::invalid_argument);
}

TEST_CASE("letter frequency table counts every letter", "[wordfeat]") {
    const auto table = build_letter_frequency({"aabbb", "ccccc"});
    CHECK(table.of('a') == Catch::Approx(0.2));
    CHECK(table.of('b') == Catch::Approx(0.3));
    CHECK(table.of('c') == Catch::Approx(0.5));
    CHECK(table.of('z') == 0.0);
    const double sum = std::accumulate(table.freq.begin(), table.freq.end(), 0.0);
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));

    CHECK_THROWS_AS(build_letter_frequency({}), std::invalid_argument);
    CHECK_THROWS_AS(build_letter_frequency({"bad"}), std::invalid_argument);
}

TEST_CASE("embedded lexicon knows common five-letter words", "[wordfeat]") {
    const auto lex = PosLexicon::embedded();
    CHECK(lex.size() > 2000);
    CHECK(lex.lookup("eerie") == 3);  // adjective
    CHECK(lex.lookup("clean") == 3);
    CHECK(lex.lookup("probe") == 2);  // verb
    CHECK(lex.lookup("trash") == 1);  // noun
    CHECK(lex.lookup("naive") == 3);
    CHECK(lex.lookup("zzzzz") == 0);  // unknown
}

TEST_CASE("lexicon file loading and errors", "[wordfeat]") {
    fixtures::TempDir dir("lex");
    const auto path = dir.file("pos.csv");

    write_text_file(path, "eerie,3\nslump,1\n\ngorge,2\n");
    const auto lex = PosLexicon::from_file(path);
    CHECK(lex.size() == 3);
    CHECK(lex.lookup("eerie") == 3);
    CHECK(lex.lookup("gorge") == 2);
    CHECK(lex.lookup("other") == 0);

    write_text_file(path, "eerie,3,extra\n");
    CHECK_THROWS_WITH(PosLexicon::from_file(path),
                      Catch::Matchers::ContainsSubstring("line 1"));
    write_text_file(path, "eerie,9\n");
    CHECK_THROWS_AS(PosLexicon::from_file(path), ParseError);
    write_text_file(path, "eerie,x\n");
    CHECK_THROWS_AS(PosLexicon::from_file(path), ParseError);
    CHECK_THROWS_AS(PosLexicon::from_file(dir.file("missing.csv")), IoError);
}

TEST_CASE("features of eerie", "[wordfeat]") {
    const auto freq = build_letter_frequency({"eerie", "aback", "slump"});
    const auto lex = PosLexicon::embedded();
    const auto f = extract_features("eerie", 419, freq, lex);

    CHECK(f.day_index == 419);
    CHECK(f.letter_ordinals == std::array<int, 5>{5, 5, 18, 9, 5});
    CHECK(f.unique_count == 3);
    CHECK(f.vowel_count == 4);
    CHECK(f.consonant_count == 1);
    CHECK(f.has_double == 0);
    CHECK(f.has_triple == 1);
    CHECK(f.pos_code == 3);
    CHECK(f.letter_freqs[0] == Catch::Approx(freq.of('e')));
    CHECK(f.letter_freqs[2] == Catch::Approx(freq.of('r')));
}

TEST_CASE("features of aback", "[wordfeat]") {
    const auto freq = build_letter_frequency({"eerie", "aback", "slump"});
    const auto lex = PosLexicon::embedded();
    const auto f = extract_features("aback", 100, freq, lex);

    CHECK(f.letter_ordinals == std::array<int, 5>{1, 2, 1, 3, 11});
    CHECK(f.unique_count == 4);
    CHECK(f.vowel_count == 2);
    CHECK(f.has_double == 1);
    CHECK(f.has_triple == 0);
}

TEST_CASE("all-distinct words set no repetition flags", "[wordfeat]") {
    const auto freq = build_letter_frequency({"slump"});
    const auto lex = PosLexicon::embedded();
    const auto f = extract_features("slump", 1, freq, lex);
    CHECK(f.unique_count == 5);
    CHECK(f.has_double == 0);
    CHECK(f.has_triple == 0);
    CHECK(f.vowel_count + f.consonant_count == 5);
}

TEST_CASE("feature vectors have the documented widths", "[wordfeat]") {
    const auto freq = build_letter_frequency({"eerie"});
    const auto lex = PosLexicon::embedded();
    const auto f = extract_features("eerie", 419, freq, lex);

    const auto full = feature_vector(f, FeatureSet::Full16);
    const auto small = feature_vector(f, FeatureSet::Table3Only11);
    REQUIRE(full.size() == 16);
    REQUIRE(small.size() == 11);
    CHECK(feature_count(FeatureSet::Full16) == 16);
    CHECK(feature_count(FeatureSet::Table3Only11) == 11);

    // the 11-feature set is a prefix of the full set
    for (std::size_t j = 0; j < 11; ++j) CHECK(small[j] == full[j]);
    CHECK(full[0] == 419.0);
    CHECK(full[1] == 5.0);   // first letter ordinal
    CHECK(full[11] == 3.0);  // unique letters
    CHECK(full[12] == 4.0);  // vowels
    CHECK(full[13] == 0.0);  // double flag
    CHECK(full[14] == 1.0);  // triple flag
    CHECK(full[15] == 3.0);  // pos code
}

TEST_CASE("normalization round trips through invert_scaling", "[wordfeat]") {
    const std::vector<std::vector<double>> rows{{1.0, 10.0, 5.0},
                                                {2.0, 20.0, 5.0},
                                                {3.0, 15.0, 5.0},
                                                {4.0, 12.0, 5.0}};
    ScalingRecord rec;
    const auto norm = normalize_features(rows, &rec);
    REQUIRE(norm.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (double v : norm[i]) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        const auto back = invert_scaling(rec, norm[i]);
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            CHECK(back[j] == Catch::Approx(rows[i][j]).margin(1e-12));
        }
    }
    // constant columns scale to the midpoint
    CHECK(norm[0][2] == 0.5);
    CHECK(rec.min[2] == 5.0);
    CHECK(rec.max[2] == 5.0);
}

TEST_CASE("normalization rejects degenerate input", "[wordfeat]") {
    CHECK_THROWS_AS(normalize_features({{1.0}}, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(normalize_features({{1.0, 2.0}, {1.0}}, nullptr), std::invalid_argument);
}

TEST_CASE("apply_scaling clamps out-of-range inputs", "[wordfeat]") {
    const std::vector<std::vector<double>> rows{{0.0, 100.0}, {10.0, 200.0}};
    ScalingRecord rec;
    normalize_features(rows, &rec);

    bool clamped = true;
    const auto in_range = apply_scaling(rec, {5.0, 150.0}, &clamped);
    CHECK_FALSE(clamped);
    CHECK(in_range[0] == Catch::Approx(0.5));
    CHECK(in_range[1] == Catch::Approx(0.5));

    const auto outside = apply_scaling(rec, {-5.0, 300.0}, &clamped);
    CHECK(clamped);
    CHECK(outside[0] == 0.0);
    CHECK(outside[1] == 1.0);

    CHECK_THROWS_AS(apply_scaling(rec, {1.0}, nullptr), std::invalid_argument);
}
