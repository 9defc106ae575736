#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "wordlecast/csv.hpp"
#include "wordlecast/dataset.hpp"
#include "wordlecast/difficulty.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/neural.hpp"
#include "wordlecast/timeseries.hpp"
#include "wordlecast/wordfeat.hpp"

namespace wordlecast::io {

using json = nlohmann::json;

/// Bundle of everything needed to score an unseen word: the trained
/// network, the training-set scaling, the corpus letter frequencies,
/// and which feature set the network was trained on.
struct WordModel {
    neural::MlpModel mlp;
    words::ScalingRecord scaling;
    words::LetterFrequencyTable freq;
    words::FeatureSet feature_set = words::FeatureSet::Full16;
};

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline json arimax_to_json(const timeseries::ArimaxModel& m) {
    return json{{"order", {{"p", m.order.p}, {"d", m.order.d}, {"q", m.order.q}}},
                {"ar_coeffs", m.ar_coeffs},
                {"ma_coeffs", m.ma_coeffs},
                {"intercept", m.intercept},
                {"weekend_factor", m.weekend_factor},
                {"residual_variance", m.residual_variance},
                {"css", m.css},
                {"train_start_day", m.train_start_day},
                {"train_end_day", m.train_end_day},
                {"unstable_ar", m.unstable_ar}};
}

inline timeseries::ArimaxModel arimax_from_json(const json& j) {
    try {
        timeseries::ArimaxModel m;
        m.order.p = j.at("order").at("p").get<int>();
        m.order.d = j.at("order").at("d").get<int>();
        m.order.q = j.at("order").at("q").get<int>();
        m.ar_coeffs = j.at("ar_coeffs").get<std::vector<double>>();
        m.ma_coeffs = j.at("ma_coeffs").get<std::vector<double>>();
        m.intercept = j.at("intercept").get<double>();
        m.weekend_factor = j.at("weekend_factor").get<double>();
        m.residual_variance = j.at("residual_variance").get<double>();
        m.css = j.value("css", 0.0);
        m.train_start_day = j.at("train_start_day").get<long>();
        m.train_end_day = j.at("train_end_day").get<long>();
        m.unstable_ar = j.at("unstable_ar").get<bool>();
        if (static_cast<int>(m.ar_coeffs.size()) != m.order.p ||
            static_cast<int>(m.ma_coeffs.size()) != m.order.q) {
            throw ParseError("arimax model: coefficient counts do not match the order");
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("arimax model: ") + e.what());
    }
}

inline json word_model_to_json(const WordModel& wm) {
    json layers = json::array();
    for (std::size_t l = 0; l < wm.mlp.layer_count(); ++l) {
        layers.push_back(json{{"weights", wm.mlp.weights[l]}, {"biases", wm.mlp.biases[l]}});
    }
    std::vector<double> freq(wm.freq.freq.begin(), wm.freq.freq.end());
    return json{{"layer_sizes", wm.mlp.layer_sizes},
                {"layers", layers},
                {"seed", wm.mlp.seed},
                {"epochs_trained", wm.mlp.epochs_trained},
                {"scaling", {{"min", wm.scaling.min}, {"max", wm.scaling.max}}},
                {"letter_freq", freq},
                {"feature_set", wm.feature_set == words::FeatureSet::Full16 ? "full16" : "table3only11"}};
}

inline WordModel word_model_from_json(const json& j) {
    try {
        WordModel wm;
        wm.mlp.layer_sizes = j.at("layer_sizes").get<std::vector<int>>();
        for (const auto& layer : j.at("layers")) {
            wm.mlp.weights.push_back(layer.at("weights").get<std::vector<double>>());
            wm.mlp.biases.push_back(layer.at("biases").get<std::vector<double>>());
        }
        wm.mlp.seed = j.at("seed").get<unsigned long long>();
        wm.mlp.epochs_trained = j.at("epochs_trained").get<int>();
        wm.scaling.min = j.at("scaling").at("min").get<std::vector<double>>();
        wm.scaling.max = j.at("scaling").at("max").get<std::vector<double>>();
        const auto freq = j.at("letter_freq").get<std::vector<double>>();
        if (freq.size() != 26) throw ParseError("word model: letter_freq must have 26 entries");
        std::copy(freq.begin(), freq.end(), wm.freq.freq.begin());
        const std::string fs = j.at("feature_set").get<std::string>();
        if (fs == "full16") {
            wm.feature_set = words::FeatureSet::Full16;
        } else if (fs == "table3only11") {
            wm.feature_set = words::FeatureSet::Table3Only11;
        } else {
            throw ParseError("word model: unknown feature_set '" + fs + "'");
        }
        if (wm.mlp.layer_sizes.size() < 3 ||
            wm.mlp.weights.size() != wm.mlp.layer_sizes.size() - 1) {
            throw ParseError("word model: layer shapes inconsistent");
        }
        return wm;
    } catch (const json::exception& e) {
        throw ParseError(std::string("word model: ") + e.what());
    }
}

inline json difficulty_to_json(const difficulty::DifficultyModel& m) {
    return json{{"k", m.k},
                {"centroids", m.centroids},
                {"assignments", m.assignments},
                {"mean_silhouette", m.mean_silhouette},
                {"wcss", m.wcss}};
}

inline difficulty::DifficultyModel difficulty_from_json(const json& j) {
    try {
        difficulty::DifficultyModel m;
        m.k = j.at("k").get<int>();
        m.centroids = j.at("centroids").get<std::vector<double>>();
        m.assignments = j.at("assignments").get<std::vector<int>>();
        m.mean_silhouette = j.at("mean_silhouette").get<double>();
        m.wcss = j.at("wcss").get<double>();
        if (static_cast<int>(m.centroids.size()) != m.k) {
            throw ParseError("difficulty model: centroid count does not match k");
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("difficulty model: ") + e.what());
    }
}

inline json cleaning_report_to_json(const CleaningReport& rep) {
    json fixes = json::array();
    for (const auto& f : rep.word_fixes) {
        fixes.push_back(json{{"date", format_date(f.date)}, {"from", f.old_word}, {"to", f.new_word}});
    }
    json outliers = json::array();
    for (const auto& f : rep.outlier_fixes) {
        outliers.push_back(json{{"date", format_date(f.date)},
                                {"original", f.old_value},
                                {"replaced_with", f.new_value}});
    }
    json flags = json::array();
    for (const auto& f : rep.boundary_flags) {
        flags.push_back(json{{"date", format_date(f.date)}, {"reported_results", f.value}});
    }
    return json{{"word_fixes", fixes}, {"outlier_fixes", outliers}, {"boundary_flags", flags}};
}

inline json load_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// CSV exports
// ---------------------------------------------------------------------------

inline std::string diagnostics_csv(const timeseries::DiagnosticsReport& rep) {
    std::string out = "lag,acf,pacf,band\n";
    for (std::size_t lag = 0; lag < rep.acf.size(); ++lag) {
        out += std::to_string(lag);
        out += ',';
        out += format_number(rep.acf[lag]);
        out += ',';
        out += lag == 0 ? "1" : format_number(rep.pacf[lag - 1]);
        out += ',';
        out += format_number(rep.band_halfwidth);
        out += '\n';
    }
    return out;
}

inline std::string letter_frequency_csv(const words::LetterFrequencyTable& table) {
    std::string out = "letter,frequency\n";
    for (int i = 0; i < 26; ++i) {
        out += static_cast<char>('a' + i);
        out += ',';
        out += format_number(table.freq[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

inline std::string silhouette_scores_csv(const difficulty::KSelection& sel) {
    std::string out = "k,mean_silhouette\n";
    for (const auto& [k, score] : sel.scores) {
        out += std::to_string(k);
        out += ',';
        out += format_number(score);
        out += '\n';
    }
    return out;
}

inline std::string level_summary_csv(const difficulty::LevelSummaryReport& rep) {
    std::string out =
        "level,word_count,mean_avg_tries,mean_freq_sum,mean_unique_count,mean_vowel_count,"
        "mean_consonant_count,mean_has_double,mean_has_triple,mean_pos_code\n";
    for (const auto& s : rep.levels) {
        out += std::to_string(s.level);
        out += ',' + std::to_string(s.word_count);
        out += ',' + format_number(s.mean_avg_tries);
        out += ',' + format_number(s.mean_freq_sum);
        out += ',' + format_number(s.mean_unique_count);
        out += ',' + format_number(s.mean_vowel_count);
        out += ',' + format_number(s.mean_consonant_count);
        out += ',' + format_number(s.mean_has_double);
        out += ',' + format_number(s.mean_has_triple);
        out += ',' + format_number(s.mean_pos_code);
        out += '\n';
    }
    return out;
}

} // namespace wordlecast::io
