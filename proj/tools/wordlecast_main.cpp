#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wordlecast/calendar.hpp"
#include "wordlecast/csv.hpp"
#include "wordlecast/dataset.hpp"
#include "wordlecast/difficulty.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/io.hpp"
#include "wordlecast/neural.hpp"
#include "wordlecast/pipeline.hpp"
#include "wordlecast/svg.hpp"
#include "wordlecast/timeseries.hpp"
#include "wordlecast/wordfeat.hpp"

namespace {

using wordlecast::io::json;
namespace fs = std::filesystem;
namespace pl = wordlecast::pipeline;
namespace ts = wordlecast::timeseries;

std::string out_path(const pl::RunConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

pl::PreparedCorpus load_corpus(const pl::RunConfig& cfg) {
    if (cfg.data_path.empty()) {
        throw wordlecast::IoError("no dataset given: pass --data or set \"data\" in the config");
    }
    return pl::load_and_clean(cfg.data_path);
}

json metrics_to_json(const ts::ErrorMetrics& m) {
    return json{{"mean_relative_error", m.mean_relative_error},
                {"mae", m.mae},
                {"excluded_points", m.excluded_points}};
}

void cmd_ingest(const pl::RunConfig& cfg) {
    const auto prepared = load_corpus(cfg);
    wordlecast::write_text_file(out_path(cfg, "cleaned.csv"),
                                wordlecast::serialize_csv(prepared.corpus));
    wordlecast::io::save_json_file(out_path(cfg, "cleaning_report.json"),
                                   wordlecast::io::cleaning_report_to_json(prepared.cleaning));
    std::printf("ingested %zu rows: %zu word fixes, %zu outlier fixes, %zu boundary flags\n",
                prepared.corpus.size(), prepared.cleaning.word_fixes.size(),
                prepared.cleaning.outlier_fixes.size(), prepared.cleaning.boundary_flags.size());
}

void cmd_diagnose(const pl::RunConfig& cfg) {
    const auto prepared = load_corpus(cfg);
    const auto series = pl::declining_series(prepared.corpus, cfg.declining_start);
    const auto rep = ts::diagnostics(series);
    const auto adf = ts::adf_test(series, 12);
    wordlecast::write_text_file(out_path(cfg, "diagnostics.csv"),
                                wordlecast::io::diagnostics_csv(rep));
    wordlecast::io::save_json_file(
        out_path(cfg, "adf.json"),
        json{{"statistic", adf.statistic},
             {"reject_unit_root", adf.reject},
             {"used_lag", adf.used_lag},
             {"effective_n", adf.effective_n},
             {"critical_values", {{"1%", adf.crit_1}, {"5%", adf.crit_5}, {"10%", adf.crit_10}}},
             {"band_halfwidth", rep.band_halfwidth},
             {"suggested_order", {{"p", rep.suggested_p}, {"d", rep.suggested_d}, {"q", rep.suggested_q}}}});
    std::printf("adf statistic %.4f (%s unit root), suggested order (%d,%d,%d)\n", adf.statistic,
                adf.reject ? "rejects" : "cannot reject", rep.suggested_p, rep.suggested_d,
                rep.suggested_q);
}

void cmd_fit(const pl::RunConfig& cfg) {
    const auto prepared = load_corpus(cfg);
    const auto model = pl::fit_declining(prepared.corpus, cfg);
    const auto series = pl::declining_series(prepared.corpus, cfg.declining_start);
    const auto whiteness = ts::residual_whiteness(model, series);
    auto mj = wordlecast::io::arimax_to_json(model);
    mj["residual_whiteness_ok"] = whiteness.whiteness_ok;
    wordlecast::io::save_json_file(out_path(cfg, "arimax_model.json"), mj);

    const auto eval = pl::holdout_eval(prepared.corpus, cfg);
    wordlecast::io::save_json_file(
        out_path(cfg, "fit_eval.json"),
        json{{"holdout_days", cfg.holdout_days},
             {"test_start_day", eval.test_start_day},
             {"arimax", metrics_to_json(eval.arimax)},
             {"exp_decay", metrics_to_json(eval.exp_decay)},
             {"exp_decay_params", {{"a", eval.decay.a}, {"b", eval.decay.b}, {"c", eval.decay.c}}}});
    std::printf("arimax(%d,%d,%d) factor %.5f: holdout rel err %.4f, mae %.3f "
                "(exp decay rel err %.4f)\n",
                model.order.p, model.order.d, model.order.q, model.weekend_factor,
                eval.arimax.mean_relative_error, eval.arimax.mae,
                eval.exp_decay.mean_relative_error);
}

void cmd_forecast(const pl::RunConfig& cfg, const std::string& date) {
    const auto prepared = load_corpus(cfg);
    const auto res = pl::forecast_to_date(prepared.corpus, cfg, date);
    wordlecast::io::save_json_file(
        out_path(cfg, "forecast.json"),
        json{{"target_date", wordlecast::format_date(res.target)},
             {"target_day_index", res.target_day},
             {"horizon", res.horizon},
             {"point_forecast", res.value},
             {"clamped", res.clamped},
             {"path", res.path},
             {"model", wordlecast::io::arimax_to_json(res.model)}});
    std::printf("forecast for %s (day %ld, horizon %d): %.3f\n",
                wordlecast::format_date(res.target).c_str(), res.target_day, res.horizon,
                res.value);
}

void cmd_predict_word(const pl::RunConfig& cfg, const std::string& word, const std::string& date) {
    const auto prepared = load_corpus(cfg);
    const auto lexicon = wordlecast::words::PosLexicon::embedded();
    const auto trained = pl::train_word_model(prepared.corpus, cfg, lexicon);
    wordlecast::io::save_json_file(out_path(cfg, "word_model.json"),
                                   wordlecast::io::word_model_to_json(trained.artifact));

    const auto pred = pl::predict_word(trained.artifact, lexicon, word, date);
    const auto diff = pl::difficulty_from_corpus(prepared.corpus, lexicon, cfg.k_min, cfg.k_max);
    const int level = wordlecast::difficulty::classify(pred.prediction.avg_tries, diff.model);

    std::vector<double> pct(pred.prediction.pct.begin(), pred.prediction.pct.end());
    wordlecast::io::save_json_file(
        out_path(cfg, "prediction.json"),
        json{{"word", pred.word},
             {"date", wordlecast::format_date(pred.date)},
             {"day_index", pred.day_index},
             {"pct", pct},
             {"avg_tries", pred.prediction.avg_tries},
             {"difficulty_level", level},
             {"difficulty_k", diff.model.k},
             {"features_clamped", pred.features_clamped},
             {"test_overall_w", trained.test_report.overall_w}});
    std::printf("%s on %s: avg tries %.3f, difficulty level %d of %d (test W %.4f)\n",
                word.c_str(), date.c_str(), pred.prediction.avg_tries, level, diff.model.k,
                trained.test_report.overall_w);
}

void cmd_difficulty(const pl::RunConfig& cfg) {
    const auto prepared = load_corpus(cfg);
    const auto lexicon = wordlecast::words::PosLexicon::embedded();
    const auto res = pl::difficulty_from_corpus(prepared.corpus, lexicon, cfg.k_min, cfg.k_max);
    auto dj = wordlecast::io::difficulty_to_json(res.model);
    json scores = json::array();
    for (const auto& [k, score] : res.selection.scores) {
        scores.push_back(json{{"k", k}, {"mean_silhouette", score}});
    }
    dj["selection_scores"] = scores;
    wordlecast::io::save_json_file(out_path(cfg, "difficulty_model.json"), dj);
    wordlecast::write_text_file(out_path(cfg, "silhouette_scores.csv"),
                                wordlecast::io::silhouette_scores_csv(res.selection));
    wordlecast::write_text_file(out_path(cfg, "level_summary.csv"),
                                wordlecast::io::level_summary_csv(res.summary));
    std::printf("best k = %d with mean silhouette %.4f\n", res.model.k, res.model.mean_silhouette);
}

void cmd_sensitivity(const pl::RunConfig& cfg, const std::string& scenario,
                     const std::string& target) {
    const auto prepared = load_corpus(cfg);
    pl::InjectionSpec spec;
    if (scenario == "comap-2023") {
        spec = pl::comap_2023_scenario();
    } else {
        throw wordlecast::ParseError("unknown scenario '" + scenario +
                                     "' (available: comap-2023)");
    }
    const auto res = pl::run_sensitivity(prepared.corpus, cfg, spec, target);
    std::vector<double> dist(spec.bucket_dist.begin(), spec.bucket_dist.end());
    wordlecast::io::save_json_file(
        out_path(cfg, "sensitivity.json"),
        json{{"scenario", scenario},
             {"target_date", target},
             {"baseline_forecast", res.baseline.value},
             {"perturbed_forecast", res.perturbed.value},
             {"relative_deviation", res.relative_deviation},
             {"total_added_players", res.total_added},
             {"injection",
              {{"start", wordlecast::format_date(spec.start)},
               {"end", wordlecast::format_date(spec.end)},
               {"added_per_day", spec.added_per_day},
               {"bucket_dist", dist}}}});
    std::printf("baseline %.3f vs perturbed %.3f: deviation %.4f%%\n", res.baseline.value,
                res.perturbed.value, 100.0 * res.relative_deviation);
}

void require_artifact(const std::string& path) {
    if (!fs::exists(path)) {
        throw wordlecast::IoError("report: missing artifact " + path +
                                  " (run the producing command first)");
    }
}

void cmd_report(const pl::RunConfig& cfg) {
    namespace svg = wordlecast::svg;
    const auto prepared = load_corpus(cfg);
    const auto forecast_path = out_path(cfg, "forecast.json");
    const auto prediction_path = out_path(cfg, "prediction.json");
    const auto difficulty_path = out_path(cfg, "difficulty_model.json");
    require_artifact(forecast_path);
    require_artifact(prediction_path);
    require_artifact(difficulty_path);
    const json fj = wordlecast::io::load_json_file(forecast_path);
    const json pj = wordlecast::io::load_json_file(prediction_path);
    const json dj = wordlecast::io::load_json_file(difficulty_path);

    auto write_plot = [&](const std::string& name, const std::string& content) {
        if (cfg.plots) wordlecast::write_text_file(out_path(cfg, name), content);
    };

    // history + forecast
    const auto series = pl::declining_series(prepared.corpus, cfg.declining_start);
    {
        std::string csv = "day_index,value,kind\n";
        svg::LineSeries hist{"history", svg::palette_color(0), {}};
        for (std::size_t i = 0; i < series.size(); ++i) {
            const long day = series.day_index_at(i);
            csv += std::to_string(day) + ',' + wordlecast::format_number(series.values[i]) +
                   ",history\n";
            hist.points.emplace_back(static_cast<double>(day), series.values[i]);
        }
        svg::LineSeries fut{"forecast", svg::palette_color(1), {}};
        const auto path = fj.at("path").get<std::vector<double>>();
        for (std::size_t h = 0; h < path.size(); ++h) {
            const long day = series.end_day_index() + static_cast<long>(h) + 1;
            csv += std::to_string(day) + ',' + wordlecast::format_number(path[h]) + ",forecast\n";
            fut.points.emplace_back(static_cast<double>(day), path[h]);
        }
        wordlecast::write_text_file(out_path(cfg, "forecast_series.csv"), csv);
        write_plot("forecast_series.svg",
                   svg::line_chart("Reported results: history and forecast", "day index",
                                   "reported results", {hist, fut}));
    }

    // correlograms
    {
        const auto rep = ts::diagnostics(series);
        std::string acf_csv = "lag,acf,band\n";
        std::string pacf_csv = "lag,pacf,band\n";
        svg::LineSeries acf_line{"acf", svg::palette_color(0), {}};
        svg::LineSeries pacf_line{"pacf", svg::palette_color(0), {}};
        svg::LineSeries band_hi{"+band", svg::palette_color(3), {}};
        svg::LineSeries band_lo{"-band", svg::palette_color(3), {}};
        for (std::size_t lag = 0; lag < rep.acf.size(); ++lag) {
            acf_csv += std::to_string(lag) + ',' + wordlecast::format_number(rep.acf[lag]) + ',' +
                       wordlecast::format_number(rep.band_halfwidth) + '\n';
            acf_line.points.emplace_back(static_cast<double>(lag), rep.acf[lag]);
            band_hi.points.emplace_back(static_cast<double>(lag), rep.band_halfwidth);
            band_lo.points.emplace_back(static_cast<double>(lag), -rep.band_halfwidth);
            if (lag >= 1) {
                pacf_csv += std::to_string(lag) + ',' +
                            wordlecast::format_number(rep.pacf[lag - 1]) + ',' +
                            wordlecast::format_number(rep.band_halfwidth) + '\n';
                pacf_line.points.emplace_back(static_cast<double>(lag), rep.pacf[lag - 1]);
            }
        }
        wordlecast::write_text_file(out_path(cfg, "acf.csv"), acf_csv);
        wordlecast::write_text_file(out_path(cfg, "pacf.csv"), pacf_csv);
        write_plot("acf.svg", svg::line_chart("Autocorrelation", "lag", "acf",
                                              {acf_line, band_hi, band_lo}));
        write_plot("pacf.svg", svg::line_chart("Partial autocorrelation", "lag", "pacf",
                                               {pacf_line, band_hi, band_lo}));
    }

    // letter frequency
    {
        std::vector<std::string> all_words;
        for (const auto& r : prepared.corpus.records) all_words.push_back(r.word);
        const auto freq = wordlecast::words::build_letter_frequency(all_words);
        wordlecast::write_text_file(out_path(cfg, "letter_frequency.csv"),
                                    wordlecast::io::letter_frequency_csv(freq));
        std::vector<svg::PieSlice> slices;
        for (int i = 0; i < 26; ++i) {
            if (freq.freq[static_cast<std::size_t>(i)] <= 0.0) continue;
            slices.push_back(svg::PieSlice{std::string(1, static_cast<char>('a' + i)),
                                           freq.freq[static_cast<std::size_t>(i)],
                                           svg::palette_color(static_cast<std::size_t>(i))});
        }
        write_plot("letter_frequency.svg", svg::pie_chart("Letter frequency", slices));
    }

    // difficulty level populations
    {
        const auto assignments = dj.at("assignments").get<std::vector<int>>();
        const int k = dj.at("k").get<int>();
        std::vector<int> counts(static_cast<std::size_t>(k), 0);
        for (int a : assignments) {
            if (a >= 1 && a <= k) ++counts[static_cast<std::size_t>(a - 1)];
        }
        std::string csv = "level,word_count\n";
        std::vector<svg::PieSlice> slices;
        for (int level = 1; level <= k; ++level) {
            const int c = counts[static_cast<std::size_t>(level - 1)];
            csv += std::to_string(level) + ',' + std::to_string(c) + '\n';
            if (c > 0) {
                slices.push_back(svg::PieSlice{"level " + std::to_string(level),
                                               static_cast<double>(c),
                                               svg::palette_color(static_cast<std::size_t>(level - 1))});
            }
        }
        wordlecast::write_text_file(out_path(cfg, "levels.csv"), csv);
        write_plot("levels.svg", svg::pie_chart("Difficulty level populations", slices));
    }

    // predicted distribution vs corpus mean
    {
        const auto pct = pj.at("pct").get<std::vector<double>>();
        std::array<double, 7> mean_pct{};
        for (const auto& r : prepared.corpus.records) {
            for (std::size_t j = 0; j < 7; ++j) mean_pct[j] += r.tries_pct[j];
        }
        for (std::size_t j = 0; j < 7; ++j) mean_pct[j] /= static_cast<double>(prepared.corpus.size());
        std::string csv = "bucket,predicted_pct,corpus_mean_pct\n";
        svg::LineSeries pred_line{"predicted " + pj.at("word").get<std::string>(),
                                  svg::palette_color(1), {}};
        svg::LineSeries mean_line{"corpus mean", svg::palette_color(0), {}};
        static const char* bucket_names[7] = {"1", "2", "3", "4", "5", "6", "X"};
        for (std::size_t j = 0; j < 7; ++j) {
            csv += std::string(bucket_names[j]) + ',' + wordlecast::format_number(pct[j]) + ',' +
                   wordlecast::format_number(mean_pct[j]) + '\n';
            pred_line.points.emplace_back(static_cast<double>(j + 1), pct[j]);
            mean_line.points.emplace_back(static_cast<double>(j + 1), mean_pct[j]);
        }
        wordlecast::write_text_file(out_path(cfg, "distribution.csv"), csv);
        write_plot("distribution.svg",
                   svg::line_chart("Tries distribution: predicted vs corpus mean",
                                   "bucket (X = 7)", "percent", {pred_line, mean_line}));
    }

    std::printf("report written to %s%s\n", cfg.out_dir.c_str(),
                cfg.plots ? "" : " (plots disabled)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wordle reported-results forecasting and word-difficulty toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string data_flag, out_flag, config_flag;
    long long seed_flag = -1;
    app.add_option("--data", data_flag, "input dataset CSV");
    app.add_option("--out", out_flag, "output directory (default: out)");
    app.add_option("--seed", seed_flag, "random seed (default: 2023)");
    app.add_option("--config", config_flag, "JSON config file");

    auto* ingest = app.add_subcommand("ingest", "parse, validate, and clean the dataset");
    auto* diagnose = app.add_subcommand("diagnose", "correlograms and stationarity test");
    auto* fit = app.add_subcommand("fit", "fit the reported-results model and score a holdout");

    auto* forecast = app.add_subcommand("forecast", "forecast reported results for a date");
    std::string forecast_date;
    forecast->add_option("--date", forecast_date, "target date YYYY-MM-DD")->required();

    auto* predict = app.add_subcommand("predict-word", "predict the tries distribution of a word");
    std::string predict_word_arg, predict_date;
    predict->add_option("--word", predict_word_arg, "five-letter word")->required();
    predict->add_option("--date", predict_date, "target date YYYY-MM-DD")->required();

    auto* difficulty_cmd = app.add_subcommand("difficulty", "cluster words into difficulty levels");
    int k_min_flag = -1, k_max_flag = -1;
    difficulty_cmd->add_option("--k-min", k_min_flag, "smallest k to try (default: 2)");
    difficulty_cmd->add_option("--k-max", k_max_flag, "largest k to try (default: 8)");

    auto* sensitivity = app.add_subcommand("sensitivity", "player-spike injection scenario");
    std::string scenario = "comap-2023";
    std::string sens_target = "2023-03-01";
    sensitivity->add_option("--scenario", scenario, "scenario name (default: comap-2023)");
    sensitivity->add_option("--target", sens_target, "forecast target date");

    auto* report = app.add_subcommand("report", "emit SVG charts and backing CSVs");
    bool no_plots = false;
    report->add_flag("--no-plots", no_plots, "write only the CSVs");

    try {
        app.parse(argc, argv);

        pl::RunConfig cfg;
        if (!config_flag.empty()) {
            cfg = pl::config_from_json(wordlecast::io::load_json_file(config_flag), cfg);
        }
        if (!data_flag.empty()) cfg.data_path = data_flag;
        if (!out_flag.empty()) cfg.out_dir = out_flag;
        if (seed_flag >= 0) cfg.seed = static_cast<unsigned long long>(seed_flag);
        if (k_min_flag > 0) cfg.k_min = k_min_flag;
        if (k_max_flag > 0) cfg.k_max = k_max_flag;
        if (no_plots) cfg.plots = false;

        if (ingest->parsed()) cmd_ingest(cfg);
        if (diagnose->parsed()) cmd_diagnose(cfg);
        if (fit->parsed()) cmd_fit(cfg);
        if (forecast->parsed()) cmd_forecast(cfg, forecast_date);
        if (predict->parsed()) cmd_predict_word(cfg, predict_word_arg, predict_date);
        if (difficulty_cmd->parsed()) cmd_difficulty(cfg);
        if (sensitivity->parsed()) cmd_sensitivity(cfg, scenario, sens_target);
        if (report->parsed()) cmd_report(cfg);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const wordlecast::ComputeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const wordlecast::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const wordlecast::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
