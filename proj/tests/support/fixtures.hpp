#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "wordlecast/calendar.hpp"
#include "wordlecast/dataset.hpp"
#include "wordlecast/rng.hpp"
#include "wordlecast/timeseries.hpp"

namespace fixtures {

inline std::array<double, 7> default_pct() { return {1, 7, 24, 33, 22, 10, 3}; }

inline wordlecast::DailyRecord make_record(const std::string& date, long long contest,
                                           const std::string& word, long long reported,
                                           long long hard = 0,
                                           std::array<double, 7> pct = default_pct()) {
    wordlecast::DailyRecord r;
    r.date = wordlecast::parse_date(date);
    r.day_index = wordlecast::day_index_of(r.date);
    r.contest_number = contest;
    r.word = word;
    r.reported_results = reported;
    r.hard_mode_count = hard;
    r.tries_pct = pct;
    return r;
}

/// Consecutive days starting at `start`, one record per entry.
inline wordlecast::Corpus build_corpus(const std::string& start,
                                       const std::vector<std::pair<std::string, long long>>& rows) {
    wordlecast::Corpus corpus;
    wordlecast::Date d = wordlecast::parse_date(start);
    long long contest = 202;
    for (const auto& [word, reported] : rows) {
        corpus.records.push_back(
            make_record(wordlecast::format_date(d), contest++, word, reported));
        d = wordlecast::next_day(d);
    }
    return corpus;
}

inline wordlecast::timeseries::Series make_series(std::vector<double> values,
                                                  long start_day = 1) {
    wordlecast::timeseries::Series s;
    s.values = std::move(values);
    s.start_day_index = start_day;
    return s;
}

/// ARMA(p,q) simulator with Gaussian shocks and a 200-step burn-in.
inline wordlecast::timeseries::Series simulate_arma(const std::vector<double>& phi,
                                                    const std::vector<double>& theta, double mu,
                                                    double sigma, std::size_t n,
                                                    unsigned long long seed) {
    wordlecast::Rng rng(seed);
    const std::size_t burn = 200;
    const std::size_t total = n + burn;
    std::vector<double> x(total, mu), eps(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        eps[t] = sigma * rng.gaussian();
        double v = mu + eps[t];
        for (std::size_t i = 0; i < phi.size() && t >= i + 1; ++i) {
            v += phi[i] * (x[t - 1 - i] - mu);
        }
        for (std::size_t j = 0; j < theta.size() && t >= j + 1; ++j) {
            v += theta[j] * eps[t - 1 - j];
        }
        x[t] = v;
    }
    return make_series(std::vector<double>(x.begin() + burn, x.end()));
}

inline wordlecast::timeseries::Series white_noise(std::size_t n, unsigned long long seed,
                                                  double mu = 0.0, double sigma = 1.0) {
    return simulate_arma({}, {}, mu, sigma, n, seed);
}

inline wordlecast::timeseries::Series random_walk(std::size_t n, unsigned long long seed) {
    wordlecast::Rng rng(seed);
    std::vector<double> x(n);
    double level = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        level += rng.gaussian();
        x[t] = level;
    }
    return make_series(std::move(x));
}

inline double wcss_of_partition(const std::vector<double>& sorted,
                                const std::vector<std::size_t>& starts) {
    double total = 0.0;
    for (std::size_t c = 0; c < starts.size(); ++c) {
        const std::size_t lo = starts[c];
        const std::size_t hi = (c + 1 < starts.size()) ? starts[c + 1] : sorted.size();
        double mean = 0.0;
        for (std::size_t i = lo; i < hi; ++i) mean += sorted[i];
        mean /= static_cast<double>(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) total += (sorted[i] - mean) * (sorted[i] - mean);
    }
    return total;
}

/// Brute-force minimum within-cluster sum of squares over every
/// contiguous partition of the sorted values into k nonempty blocks.
inline double exhaustive_min_wcss(std::vector<double> values, int k) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> cuts(kk);
    // cuts[0] = 0 always; choose the remaining k-1 block starts
    for (std::size_t c = 0; c < kk; ++c) cuts[c] = c;
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        best = std::min(best, wcss_of_partition(values, cuts));
        // advance the combination of starts (positions 1..k-1 in 1..n-1)
        std::size_t i = kk;
        while (i-- > 1) {
            if (cuts[i] + (kk - i) <= n - 1) {
                ++cuts[i];
                for (std::size_t j = i + 1; j < kk; ++j) cuts[j] = cuts[j - 1] + 1;
                break;
            }
            if (i == 1) return best;
        }
        if (kk == 1) return best;
    }
}

/// Unique scratch directory under the system temp root.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path() /
                    ("wordlecast_test_" + tag + "_XXXXXX");
        std::string templ = base.string();
        char* made = mkdtemp(templ.data());
        if (!made) throw std::runtime_error("mkdtemp failed");
        path_ = templ;
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::string& path() const { return path_; }
    std::string file(const std::string& name) const {
        return (std::filesystem::path(path_) / name).string();
    }

private:
    std::string path_;
};

} // namespace fixtures
