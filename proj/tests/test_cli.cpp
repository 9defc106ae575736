#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "wordlecast/csv.hpp"

using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WORDLECAST_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string write_fast_config(const fixtures::TempDir& dir) {
    const auto path = dir.file("config.json");
    wordlecast::write_text_file(path,
                                "{\"order\":{\"p\":2,\"q\":1},"
                                "\"k_max\":4,"
                                "\"nn\":{\"max_epochs\":40,\"hidden\":[8]}}\n");
    return path;
}

/// Runs every subcommand into out_dir with a fixed seed.
void run_full_pipeline(const std::string& out_dir, const std::string& config_path) {
    const std::string base = std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) +
                             " --out " + quoted(out_dir) + " --seed 2023 --config " +
                             quoted(config_path) + " ";
    for (const std::string& sub :
         {std::string("ingest"), std::string("diagnose"), std::string("fit"),
          std::string("forecast --date 2023-01-10"),
          std::string("predict-word --word eerie --date 2023-01-10"),
          std::string("difficulty"), std::string("sensitivity --target 2023-03-01"),
          std::string("report")}) {
        const auto res = run_cli(base + sub);
        INFO(sub << "\n" << res.output);
        REQUIRE(res.exit_code == 0);
    }
}

std::map<std::string, std::string> snapshot_dir(const std::string& root) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        files[fs::relative(entry.path(), root).string()] = std::move(data);
    }
    return files;
}

} // namespace

TEST_CASE("help exits cleanly", "[cli]") {
    CHECK(run_cli("--help").exit_code == 0);
    const auto sub = run_cli("forecast --help");
    CHECK(sub.exit_code == 0);
    CHECK_THAT(sub.output, ContainsSubstring("--date"));
}

TEST_CASE("a missing data file names the path and exits 2", "[cli]") {
    const auto res = run_cli("--data /nowhere/absent.csv ingest --out /tmp");
    CHECK(res.exit_code == 2);
    CHECK_THAT(res.output, ContainsSubstring("/nowhere/absent.csv"));
}

TEST_CASE("argument errors exit 2", "[cli]") {
    fixtures::TempDir dir("cliargs");
    const std::string base =
        std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) + " --out " + quoted(dir.path());

    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli(base + " forecast").exit_code == 2);            // --date is required
    CHECK(run_cli(base + " forecast --date nonsense").exit_code == 2);
    CHECK(run_cli(base + " forecast --date 2022-13-40").exit_code == 2);
    CHECK(run_cli(base + " sensitivity --scenario unknown --target 2023-03-01").exit_code == 2);
    CHECK(run_cli(base + " difficulty --k-min 1").exit_code == 2);

    // forecasting into the corpus is a usage error
    CHECK(run_cli(base + " forecast --date 2022-06-01").exit_code == 2);
}

TEST_CASE("report refuses to run before its inputs exist", "[cli]") {
    fixtures::TempDir dir("clireport");
    const auto res = run_cli(std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) +
                             " --out " + quoted(dir.path()) + " report");
    CHECK(res.exit_code == 2);
    CHECK_THAT(res.output, ContainsSubstring("forecast.json"));
}

TEST_CASE("the full pipeline emits every artifact", "[cli][slow]") {
    fixtures::TempDir dir("clifull");
    run_full_pipeline(dir.path(), write_fast_config(dir));

    for (const std::string& name :
         {"cleaned.csv", "cleaning_report.json", "diagnostics.csv", "adf.json",
          "arimax_model.json", "fit_eval.json", "forecast.json", "word_model.json",
          "prediction.json", "difficulty_model.json", "silhouette_scores.csv",
          "level_summary.csv", "sensitivity.json", "forecast_series.csv", "forecast_series.svg",
          "acf.csv", "acf.svg", "pacf.csv", "pacf.svg", "letter_frequency.csv",
          "letter_frequency.svg", "levels.csv", "levels.svg", "distribution.csv",
          "distribution.svg"}) {
        INFO(name);
        CHECK(fs::exists(fs::path(dir.path()) / name));
    }

    // the config cap on k shows up in the selection scores
    const auto model_json = wordlecast::read_text_file(dir.file("difficulty_model.json"));
    CHECK_THAT(model_json, ContainsSubstring("selection_scores"));
    CHECK_THAT(model_json, !ContainsSubstring("\"k\": 8"));
}

TEST_CASE("two seeded runs are byte-identical", "[cli][slow]") {
    fixtures::TempDir a("clidet_a");
    fixtures::TempDir b("clidet_b");
    const auto config_a = write_fast_config(a);
    const auto config_b = write_fast_config(b);
    run_full_pipeline(a.file("out"), config_a);
    run_full_pipeline(b.file("out"), config_b);

    const auto files_a = snapshot_dir(a.file("out"));
    const auto files_b = snapshot_dir(b.file("out"));
    REQUIRE_FALSE(files_a.empty());
    REQUIRE(files_a.size() == files_b.size());
    for (const auto& [name, data] : files_a) {
        INFO(name);
        REQUIRE(files_b.count(name) == 1);
        CHECK(data == files_b.at(name));
    }
}

TEST_CASE("plots can be switched off", "[cli][slow]") {
    fixtures::TempDir dir("clinoplot");
    const auto config = write_fast_config(dir);
    const std::string base = std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) +
                             " --out " + quoted(dir.file("out")) + " --config " + quoted(config) + " ";
    REQUIRE(run_cli(base + "fit").exit_code == 0);
    REQUIRE(run_cli(base + "forecast --date 2023-01-10").exit_code == 0);
    REQUIRE(run_cli(base + "predict-word --word eerie --date 2023-01-10").exit_code == 0);
    REQUIRE(run_cli(base + "difficulty").exit_code == 0);
    REQUIRE(run_cli(base + "report --no-plots").exit_code == 0);

    bool any_svg = false;
    for (const auto& entry : fs::recursive_directory_iterator(dir.file("out"))) {
        if (entry.path().extension() == ".svg") any_svg = true;
    }
    CHECK_FALSE(any_svg);
    CHECK(fs::exists(fs::path(dir.file("out")) / "forecast_series.csv"));
}

TEST_CASE("explicit flags beat the config file", "[cli]") {
    fixtures::TempDir dir("clioverride");
    const auto config = dir.file("config.json");
    wordlecast::write_text_file(config, "{\"out\":\"" + dir.file("config_out") + "\"}\n");

    const auto res = run_cli(std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) +
                             " --config " + quoted(config) + " --out " + quoted(dir.file("flag_out")) +
                             " ingest");
    REQUIRE(res.exit_code == 0);
    CHECK(fs::exists(fs::path(dir.file("flag_out")) / "cleaned.csv"));
    CHECK_FALSE(fs::exists(fs::path(dir.file("config_out")) / "cleaned.csv"));

    // without the flag the config value wins
    const auto res2 = run_cli(std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) +
                              " --config " + quoted(config) + " ingest");
    REQUIRE(res2.exit_code == 0);
    CHECK(fs::exists(fs::path(dir.file("config_out")) / "cleaned.csv"));

    // a corrupt config is a usage error
    wordlecast::write_text_file(config, "{broken");
    CHECK(run_cli(std::string("--data ") + quoted(WORDLECAST_SYNTHETIC_DATA) + " --config " +
                  quoted(config) + " ingest")
              .exit_code == 2);
}
