#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "wordlecast/calendar.hpp"
#include "wordlecast/dataset.hpp"
#include "wordlecast/difficulty.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/io.hpp"
#include "wordlecast/neural.hpp"
#include "wordlecast/timeseries.hpp"
#include "wordlecast/wordfeat.hpp"

namespace wordlecast::pipeline {

struct RunConfig {
    std::string data_path;
    std::string out_dir = "out";
    unsigned long long seed = 2023;
    timeseries::ArimaOrder order{9, 0, 2};
    double weekend_factor = -1.0; // negative means: use the measured corpus factor
    std::string declining_start = "2022-02-02";
    int holdout_days = 31;
    int k_min = 2;
    int k_max = 8;
    neural::TrainingConfig nn;
    std::size_t nn_test_size = 59;
    std::vector<int> hidden_sizes{32, 16};
    bool plots = true;
};

/// Applies the keys present in a JSON config on top of the defaults.
inline RunConfig config_from_json(const io::json& j, RunConfig base = {}) {
    try {
        base.data_path = j.value("data", base.data_path);
        base.out_dir = j.value("out", base.out_dir);
        base.seed = j.value("seed", base.seed);
        if (j.contains("order")) {
            base.order.p = j.at("order").value("p", base.order.p);
            base.order.d = j.at("order").value("d", base.order.d);
            base.order.q = j.at("order").value("q", base.order.q);
        }
        if (j.contains("weekend_factor") && !j.at("weekend_factor").is_null()) {
            base.weekend_factor = j.at("weekend_factor").get<double>();
        }
        base.declining_start = j.value("declining_start", base.declining_start);
        base.holdout_days = j.value("holdout_days", base.holdout_days);
        base.k_min = j.value("k_min", base.k_min);
        base.k_max = j.value("k_max", base.k_max);
        if (j.contains("nn")) {
            const auto& n = j.at("nn");
            base.nn.max_epochs = n.value("max_epochs", base.nn.max_epochs);
            base.nn.learning_rate = n.value("learning_rate", base.nn.learning_rate);
            base.nn.batch_size = n.value("batch_size", base.nn.batch_size);
            base.nn.patience = n.value("patience", base.nn.patience);
            base.nn.validation_fraction = n.value("validation_fraction", base.nn.validation_fraction);
            base.nn_test_size = n.value("test_size", base.nn_test_size);
            if (n.contains("hidden")) base.hidden_sizes = n.at("hidden").get<std::vector<int>>();
        }
        base.plots = j.value("plots", base.plots);
        return base;
    } catch (const io::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
}

struct PreparedCorpus {
    Corpus corpus;
    CleaningReport cleaning;
};

inline PreparedCorpus load_and_clean(const std::string& path) {
    const auto raw = parse_dataset(read_text_file(path));
    auto [cleaned, report] = clean_corpus(raw);
    return PreparedCorpus{std::move(cleaned), std::move(report)};
}

// ---------------------------------------------------------------------------
// series construction
// ---------------------------------------------------------------------------

inline timeseries::Series series_of(const Corpus& corpus) {
    if (corpus.empty()) throw std::invalid_argument("series_of: empty corpus");
    timeseries::Series s;
    s.start_day_index = corpus.front().day_index;
    s.values.reserve(corpus.size());
    for (const auto& r : corpus.records) s.values.push_back(static_cast<double>(r.reported_results));
    return s;
}

/// Reported-results series from a start date through the corpus end.
inline timeseries::Series declining_series(const Corpus& corpus, const std::string& start_date) {
    const Date start = parse_date(start_date);
    if (corpus.empty()) throw std::invalid_argument("declining_series: empty corpus");
    const long start_idx = day_index_of(start) - corpus.front().day_index;
    if (start_idx < 0 || start_idx >= static_cast<long>(corpus.size())) {
        throw std::invalid_argument("declining_series: start date " + start_date +
                                    " is outside the corpus");
    }
    timeseries::Series s;
    s.start_day_index = corpus.front().day_index + start_idx;
    for (std::size_t i = static_cast<std::size_t>(start_idx); i < corpus.size(); ++i) {
        s.values.push_back(static_cast<double>(corpus.records[i].reported_results));
    }
    return s;
}

inline double resolve_weekend_factor(const RunConfig& config, const Corpus& corpus) {
    if (config.weekend_factor >= 0.0) return config.weekend_factor;
    return weekend_stats(corpus).factor_w;
}

// ---------------------------------------------------------------------------
// fitting and forecasting
// ---------------------------------------------------------------------------

struct ForecastResult {
    Date target{};
    long target_day = 0;
    int horizon = 0;
    double value = 0.0;
    bool clamped = false;
    std::vector<double> path; // forecasts for horizons 1..horizon
    timeseries::ArimaxModel model;
};

inline timeseries::ArimaxModel fit_declining(const Corpus& corpus, const RunConfig& config) {
    const auto series = declining_series(corpus, config.declining_start);
    return timeseries::fit_arimax(series, config.order, resolve_weekend_factor(config, corpus));
}

/// Fit on the declining period and forecast day by day up to the
/// target date (which must lie after the corpus end).
inline ForecastResult forecast_to_date(const Corpus& corpus, const RunConfig& config,
                                       const std::string& target_date) {
    const Date target = parse_date(target_date);
    if (corpus.empty()) throw std::invalid_argument("forecast_to_date: empty corpus");
    const long horizon = day_index_of(target) - corpus.back().day_index;
    if (horizon < 1) {
        throw std::invalid_argument("forecast_to_date: target " + target_date +
                                    " is not after the corpus end");
    }
    ForecastResult res;
    res.target = target;
    res.target_day = day_index_of(target);
    res.horizon = static_cast<int>(horizon);
    res.model = fit_declining(corpus, config);
    const auto series = declining_series(corpus, config.declining_start);
    res.path = timeseries::forecast(res.model, series, res.horizon, &res.clamped);
    res.value = res.path.back();
    return res;
}

struct HoldoutEval {
    timeseries::ArimaxModel model;
    timeseries::ErrorMetrics arimax;
    timeseries::ExpDecayFit decay;
    timeseries::ErrorMetrics exp_decay;
    std::vector<double> actual;
    std::vector<double> arimax_pred;
    std::vector<double> decay_pred;
    long test_start_day = 0;
};

/// Trains on the declining period minus the last holdout_days and
/// scores both the ARIMAX fit and the exponential-decay baseline on
/// that held-out window.
inline HoldoutEval holdout_eval(const Corpus& corpus, const RunConfig& config) {
    const auto full = declining_series(corpus, config.declining_start);
    const std::size_t h = static_cast<std::size_t>(config.holdout_days);
    if (h < 1 || full.size() <= h + 20) {
        throw std::invalid_argument("holdout_eval: declining period too short for the holdout");
    }
    timeseries::Series train;
    train.start_day_index = full.start_day_index;
    train.values.assign(full.values.begin(), full.values.end() - static_cast<long>(h));

    HoldoutEval eval;
    eval.actual.assign(full.values.end() - static_cast<long>(h), full.values.end());
    eval.test_start_day = train.start_day_index + static_cast<long>(train.size());

    eval.model = timeseries::fit_arimax(train, config.order, resolve_weekend_factor(config, corpus));
    eval.arimax_pred = timeseries::forecast(eval.model, train, static_cast<int>(h));
    eval.arimax = timeseries::error_metrics(eval.arimax_pred, eval.actual);

    eval.decay = timeseries::fit_exponential_decay(train);
    eval.decay_pred.reserve(h);
    for (std::size_t i = 0; i < h; ++i) {
        eval.decay_pred.push_back(
            timeseries::exp_decay_value(eval.decay, static_cast<double>(train.size() + i)));
    }
    eval.exp_decay = timeseries::error_metrics(eval.decay_pred, eval.actual);
    return eval;
}

// ---------------------------------------------------------------------------
// word model
// ---------------------------------------------------------------------------

struct WordRows {
    std::vector<std::vector<double>> features; // raw, unscaled
    std::vector<std::array<double, 7>> targets; // percent scale
    std::vector<words::WordFeatures> attrs;
    std::vector<double> tries_values; // avg tries per word
    words::LetterFrequencyTable freq;
};

inline WordRows build_word_rows(const Corpus& corpus, const words::PosLexicon& lexicon,
                                words::FeatureSet set = words::FeatureSet::Full16) {
    if (corpus.empty()) throw std::invalid_argument("build_word_rows: empty corpus");
    WordRows rows;
    std::vector<std::string> all_words;
    all_words.reserve(corpus.size());
    for (const auto& r : corpus.records) all_words.push_back(r.word);
    rows.freq = words::build_letter_frequency(all_words);
    rows.features.reserve(corpus.size());
    rows.targets.reserve(corpus.size());
    for (const auto& r : corpus.records) {
        const auto f = words::extract_features(r.word, r.day_index, rows.freq, lexicon);
        rows.attrs.push_back(f);
        rows.features.push_back(words::feature_vector(f, set));
        rows.targets.push_back(r.tries_pct);
        rows.tries_values.push_back(difficulty::avg_tries(r.tries_pct));
    }
    return rows;
}

struct WordModelResult {
    io::WordModel artifact;
    neural::TrainLog log;
    neural::EvalReport test_report;
    neural::CollapseCheck collapse;
};

/// Trains the distribution network on the leading rows (all but the
/// last nn_test_size) and evaluates on the held-out tail.
inline WordModelResult train_word_model(const Corpus& corpus, const RunConfig& config,
                                        const words::PosLexicon& lexicon,
                                        words::FeatureSet set = words::FeatureSet::Full16) {
    const auto rows = build_word_rows(corpus, lexicon, set);
    const std::size_t n = rows.features.size();
    if (n < config.nn_test_size + 10) {
        throw std::invalid_argument("train_word_model: corpus too small for the test split");
    }
    const std::size_t train_n = n - config.nn_test_size;

    WordModelResult res;
    res.artifact.freq = rows.freq;
    res.artifact.feature_set = set;

    std::vector<std::vector<double>> train_rows(rows.features.begin(),
                                                rows.features.begin() + static_cast<long>(train_n));
    std::vector<std::array<double, 7>> train_targets(rows.targets.begin(),
                                                     rows.targets.begin() + static_cast<long>(train_n));
    const auto norm = words::normalize_features(train_rows, &res.artifact.scaling);

    std::vector<int> sizes;
    sizes.push_back(static_cast<int>(rows.features[0].size()));
    for (int hsz : config.hidden_sizes) sizes.push_back(hsz);
    sizes.push_back(neural::kBuckets);
    res.artifact.mlp = neural::init_mlp(sizes, config.seed);
    res.log = neural::train(res.artifact.mlp, norm, train_targets, config.nn);

    std::vector<std::vector<double>> test_rows;
    std::vector<std::array<double, 7>> test_targets;
    for (std::size_t i = train_n; i < n; ++i) {
        test_rows.push_back(words::apply_scaling(res.artifact.scaling, rows.features[i]));
        test_targets.push_back(rows.targets[i]);
    }
    res.test_report = neural::evaluate(res.artifact.mlp, test_rows, test_targets);
    res.collapse = neural::collapse_check(res.log, res.artifact.mlp, test_rows, test_targets);
    return res;
}

struct WordPrediction {
    std::string word;
    Date date{};
    long day_index = 0;
    neural::DistributionPrediction prediction;
    bool features_clamped = false;
};

inline WordPrediction predict_word(const io::WordModel& artifact, const words::PosLexicon& lexicon,
                                   const std::string& word, const std::string& date_text) {
    WordPrediction out;
    out.word = word;
    out.date = parse_date(date_text);
    out.day_index = day_index_of(out.date);
    const auto f = words::extract_features(word, out.day_index, artifact.freq, lexicon);
    const auto raw = words::feature_vector(f, artifact.feature_set);
    const auto scaled = words::apply_scaling(artifact.scaling, raw, &out.features_clamped);
    out.prediction = neural::forward(artifact.mlp, scaled);
    return out;
}

// ---------------------------------------------------------------------------
// difficulty
// ---------------------------------------------------------------------------

struct DifficultyResult {
    difficulty::KSelection selection;
    difficulty::DifficultyModel model;
    std::vector<double> values;
    difficulty::LevelSummaryReport summary;
};

inline DifficultyResult difficulty_from_corpus(const Corpus& corpus,
                                               const words::PosLexicon& lexicon, int k_min,
                                               int k_max) {
    const auto rows = build_word_rows(corpus, lexicon);
    DifficultyResult res;
    res.values = rows.tries_values;
    res.selection = difficulty::select_k(res.values, k_min, k_max);
    res.model = difficulty::kmeans_1d(res.values, res.selection.best_k);
    res.summary = difficulty::level_summary(rows.attrs, rows.tries_values, res.model.assignments,
                                            res.model.k);
    return res;
}

// ---------------------------------------------------------------------------
// sensitivity
// ---------------------------------------------------------------------------

struct InjectionSpec {
    Date start{};
    Date end{};
    long long added_per_day = 0;
    std::array<double, 4> bucket_dist{}; // shares over tries buckets 4, 5, 6, X

    void validate() const {
        if (added_per_day < 0) throw std::invalid_argument("injection: added_per_day must be >= 0");
        if (day_index_of(end) < day_index_of(start)) {
            throw std::invalid_argument("injection: end date before start date");
        }
        double sum = 0.0;
        for (double b : bucket_dist) {
            if (b < 0.0) throw std::invalid_argument("injection: negative bucket share");
            sum += b;
        }
        if (std::fabs(sum - 1.0) > 1e-9) {
            throw std::invalid_argument("injection: bucket distribution must sum to 1");
        }
    }
};

/// The built-in spike scenario: 28,500 extra players split evenly over
/// 2023-02-16..18, all landing in the hard buckets (4, 5, 6, X).
inline InjectionSpec comap_2023_scenario() {
    InjectionSpec spec;
    spec.start = parse_date("2023-02-16");
    spec.end = parse_date("2023-02-18");
    spec.added_per_day = 9500;
    spec.bucket_dist = {0.25, 0.25, 0.25, 0.25};
    return spec;
}

struct SensitivityResult {
    ForecastResult baseline;
    ForecastResult perturbed;
    double relative_deviation = 0.0;
    long long total_added = 0;
};

namespace detail {

/// Extends the corpus day by day through `end_day` with synthetic
/// records: reported results from the baseline forecast path, blank
/// word, corpus-mean tries distribution.
inline Corpus extend_with_forecast(const Corpus& corpus, const ForecastResult& baseline,
                                   long end_day) {
    Corpus out = corpus;
    std::array<double, 7> mean_pct{};
    for (const auto& r : corpus.records) {
        for (std::size_t j = 0; j < 7; ++j) mean_pct[j] += r.tries_pct[j];
    }
    for (std::size_t j = 0; j < 7; ++j) mean_pct[j] /= static_cast<double>(corpus.size());

    const long last_day = corpus.back().day_index;
    for (long day = last_day + 1; day <= end_day; ++day) {
        const std::size_t h = static_cast<std::size_t>(day - last_day - 1);
        if (h >= baseline.path.size()) {
            throw ComputeError("sensitivity: baseline forecast does not cover the injection range");
        }
        DailyRecord rec;
        rec.date = date_of(day);
        rec.day_index = day;
        rec.contest_number = out.back().contest_number + 1;
        rec.word = "";
        rec.reported_results = std::llround(baseline.path[h]);
        rec.hard_mode_count = 0;
        rec.tries_pct = mean_pct;
        out.records.push_back(rec);
    }
    return out;
}

inline void inject_players(Corpus& corpus, const InjectionSpec& spec) {
    // shares per bucket 1..7: zeros for 1-3, then the 4/5/6/X split
    std::array<double, 7> dist{};
    dist[3] = spec.bucket_dist[0];
    dist[4] = spec.bucket_dist[1];
    dist[5] = spec.bucket_dist[2];
    dist[6] = spec.bucket_dist[3];
    for (long day = day_index_of(spec.start); day <= day_index_of(spec.end); ++day) {
        const long idx = day - corpus.front().day_index;
        if (idx < 0 || idx >= static_cast<long>(corpus.size())) {
            throw std::invalid_argument("injection: date " + format_date(date_of(day)) +
                                        " is outside the corpus");
        }
        auto& rec = corpus.records[static_cast<std::size_t>(idx)];
        const double old_n = static_cast<double>(rec.reported_results);
        const double added = static_cast<double>(spec.added_per_day);
        const double new_n = old_n + added;
        if (new_n <= 0.0) continue;
        for (std::size_t j = 0; j < 7; ++j) {
            rec.tries_pct[j] = 100.0 * ((rec.tries_pct[j] / 100.0) * old_n + dist[j] * added) / new_n;
        }
        rec.reported_results = static_cast<long long>(std::llround(new_n));
    }
}

} // namespace detail

/// Compares the target-date forecast before and after injecting extra
/// players.  Injection days beyond the corpus are first appended as
/// synthetic records carrying the baseline forecasts.  A zero-count
/// injection leaves everything untouched.
inline SensitivityResult run_sensitivity(const Corpus& corpus, const RunConfig& config,
                                         const InjectionSpec& spec,
                                         const std::string& target_date) {
    spec.validate();
    const Date target = parse_date(target_date);
    if (day_index_of(spec.end) > day_index_of(target)) {
        throw std::invalid_argument("injection: range extends past the forecast target");
    }
    if (day_index_of(spec.start) < corpus.front().day_index) {
        throw std::invalid_argument("injection: range starts before the corpus");
    }

    SensitivityResult res;
    res.baseline = forecast_to_date(corpus, config, target_date);
    res.total_added = spec.added_per_day *
                      (day_index_of(spec.end) - day_index_of(spec.start) + 1);

    if (spec.added_per_day == 0) {
        res.perturbed = res.baseline;
        res.relative_deviation = 0.0;
        return res;
    }

    Corpus extended = corpus;
    if (day_index_of(spec.end) > corpus.back().day_index) {
        extended = detail::extend_with_forecast(corpus, res.baseline, day_index_of(spec.end));
    }
    detail::inject_players(extended, spec);

    // the weekend factor stays pinned to the baseline measurement so the
    // two fits differ only in the injected data
    RunConfig pinned = config;
    pinned.weekend_factor = resolve_weekend_factor(config, corpus);
    res.perturbed = forecast_to_date(extended, pinned, target_date);
    res.relative_deviation = res.baseline.value != 0.0
                                 ? std::fabs(res.perturbed.value - res.baseline.value) /
                                       std::fabs(res.baseline.value)
                                 : 0.0;
    return res;
}

} // namespace wordlecast::pipeline
