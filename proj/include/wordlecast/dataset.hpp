#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "wordlecast/calendar.hpp"
#include "wordlecast/csv.hpp"
#include "wordlecast/error.hpp"

namespace wordlecast {

/// One day's observation from the results table.  Words are stored as
/// read from the file; they are guaranteed to be five lowercase ASCII
/// letters only after clean_corpus has run.
struct DailyRecord {
    Date date{};
    long day_index = 0;
    long long contest_number = 0;
    std::string word;
    long long reported_results = 0;
    long long hard_mode_count = 0;
    std::array<double, 7> tries_pct{}; // buckets 1..6 and X
};

struct Corpus {
    std::vector<DailyRecord> records;

    bool empty() const { return records.empty(); }
    std::size_t size() const { return records.size(); }
    const DailyRecord& front() const { return records.front(); }
    const DailyRecord& back() const { return records.back(); }

    const DailyRecord* find(const Date& date) const {
        if (records.empty()) return nullptr;
        const long idx = day_index_of(date) - records.front().day_index;
        if (idx < 0 || idx >= static_cast<long>(records.size())) return nullptr;
        return &records[static_cast<std::size_t>(idx)];
    }

    std::vector<double> reported_values() const {
        std::vector<double> v;
        v.reserve(records.size());
        for (const auto& r : records) v.push_back(static_cast<double>(r.reported_results));
        return v;
    }
};

struct WordFix {
    Date date{};
    std::string old_word;
    std::string new_word;
};

struct OutlierFix {
    Date date{};
    long long old_value = 0;
    long long new_value = 0;
};

/// An outlier at the series boundary has no two neighbors to average;
/// it is flagged and left alone.
struct BoundaryFlag {
    Date date{};
    long long value = 0;
};

struct CleaningReport {
    std::vector<WordFix> word_fixes;
    std::vector<OutlierFix> outlier_fixes;
    std::vector<BoundaryFlag> boundary_flags;

    bool empty() const {
        return word_fixes.empty() && outlier_fixes.empty() && boundary_flags.empty();
    }
};

struct WeekendStats {
    double mean_weekday = 0.0;
    double mean_weekend = 0.0;
    double factor_w = 0.0; // (mean_weekday - mean_weekend) / mean_weekday
};

inline constexpr std::array<const char*, 12> kCsvColumns = {
    "date", "contest_number", "word",  "reported_results", "hard_mode", "pct_1",
    "pct_2", "pct_3",          "pct_4", "pct_5",            "pct_6",     "pct_x"};

inline std::string csv_header_line() {
    std::string h;
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        if (i) h.push_back(',');
        h += kCsvColumns[i];
    }
    return h;
}

/// Parse the delimited results table into a Corpus.
///
/// The header must match the documented schema.  Rows must be in
/// chronological order, one per day with no gaps.  Word content is not
/// validated here: the raw table carries entries the cleaning pass
/// repairs (extra letters, a diaeresis).
inline Corpus parse_dataset(const std::string& raw_table) {
    const auto lines = split_lines(raw_table);
    if (lines.empty()) throw ParseError("no records: input is empty");

    const auto header = split_csv_line(lines[0]);
    if (header.size() != kCsvColumns.size()) {
        throw ParseError("header has " + std::to_string(header.size()) + " columns, expected " +
                         std::to_string(kCsvColumns.size()));
    }
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        if (header[i] != kCsvColumns[i]) {
            throw ParseError("header column " + std::to_string(i + 1) + " is '" + header[i] +
                             "', expected '" + kCsvColumns[i] + "'");
        }
    }

    Corpus corpus;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        const std::string where = "row " + std::to_string(ln + 1);
        const auto f = split_csv_line(lines[ln]);
        if (f.size() != kCsvColumns.size()) {
            throw ParseError(where + ": has " + std::to_string(f.size()) + " fields, expected " +
                             std::to_string(kCsvColumns.size()));
        }
        DailyRecord rec;
        rec.date = parse_date(f[0]);
        rec.day_index = day_index_of(rec.date);
        rec.contest_number = parse_count(f[1], where + " column contest_number");
        rec.word = f[2];
        if (rec.word.empty()) throw ParseError(where + ": empty word");
        rec.reported_results = parse_count(f[3], where + " column reported_results");
        rec.hard_mode_count = parse_count(f[4], where + " column hard_mode");
        double pct_sum = 0.0;
        for (int j = 0; j < 7; ++j) {
            const std::string col = std::string("pct_") + (j < 6 ? std::to_string(j + 1) : "x");
            rec.tries_pct[static_cast<std::size_t>(j)] =
                parse_real(f[static_cast<std::size_t>(5 + j)], where + " column " + col);
            const double p = rec.tries_pct[static_cast<std::size_t>(j)];
            if (p < 0.0 || p > 100.0) {
                throw ParseError(where + " column " + col + ": percentage " + format_number(p) +
                                 " outside [0, 100]");
            }
            pct_sum += p;
        }
        if (pct_sum < 95.0 || pct_sum > 105.0) {
            throw ParseError(where + ": tries percentages sum to " + format_number(pct_sum) +
                             ", outside [95, 105]");
        }
        if (rec.hard_mode_count > rec.reported_results) {
            throw ParseError(where + ": hard_mode exceeds reported_results");
        }

        if (!corpus.records.empty()) {
            const long prev = corpus.records.back().day_index;
            if (rec.day_index == prev) {
                throw ParseError(where + ": duplicate date " + format_date(rec.date));
            }
            if (rec.day_index < prev) {
                throw ParseError(where + ": date " + format_date(rec.date) +
                                 " out of chronological order");
            }
            if (rec.day_index != prev + 1) {
                throw ParseError(where + ": missing date " +
                                 format_date(date_of(prev + 1)) + " before " +
                                 format_date(rec.date));
            }
        }
        corpus.records.push_back(std::move(rec));
    }
    if (corpus.records.empty()) throw ParseError("no records: table has a header but no rows");
    return corpus;
}

/// Serialize back to the input CSV schema.
inline std::string serialize_csv(const Corpus& corpus) {
    std::string out = csv_header_line();
    out.push_back('\n');
    for (const auto& r : corpus.records) {
        out += format_date(r.date);
        out.push_back(',');
        out += std::to_string(r.contest_number);
        out.push_back(',');
        out += r.word;
        out.push_back(',');
        out += std::to_string(r.reported_results);
        out.push_back(',');
        out += std::to_string(r.hard_mode_count);
        for (double p : r.tries_pct) {
            out.push_back(',');
            out += format_number(p);
        }
        out.push_back('\n');
    }
    return out;
}

namespace detail {

// The known word repairs.  The list is a superset guard: entries whose
// old word never occurs are simply skipped.
inline const std::vector<std::pair<std::string, std::string>>& word_fix_table() {
    static const std::vector<std::pair<std::string, std::string>> fixes = {
        {"clen", "clean"},
        {"rprobe", "probe"},
        {"tash", "trash"},
        {"na\xC3\xAFve", "naive"}, // naïve -> naive
    };
    return fixes;
}

inline std::string normalize_word(const std::string& w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w) {
        if (c == ' ' || c == '\t') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace detail

inline constexpr long long kOutlierThreshold = 10000;

/// Apply the word repairs and the reported-results outlier rule:
/// a value below 10,000 whose neighbors both exceed 10,000 is replaced
/// by the arithmetic mean of those neighbors.  Every change is recorded.
inline std::pair<Corpus, CleaningReport> clean_corpus(const Corpus& corpus) {
    Corpus cleaned = corpus;
    CleaningReport report;

    for (auto& rec : cleaned.records) {
        std::string w = detail::normalize_word(rec.word);
        for (const auto& [from, to] : detail::word_fix_table()) {
            if (w == from) {
                w = to;
                break;
            }
        }
        if (w != rec.word) {
            report.word_fixes.push_back({rec.date, rec.word, w});
            rec.word = w;
        }
    }

    auto& recs = cleaned.records;
    const std::size_t n = recs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const long long v = recs[i].reported_results;
        if (v >= kOutlierThreshold) continue;
        if (i == 0 || i + 1 == n) {
            report.boundary_flags.push_back({recs[i].date, v});
            continue;
        }
        const long long left = recs[i - 1].reported_results;
        const long long right = recs[i + 1].reported_results;
        if (left > kOutlierThreshold && right > kOutlierThreshold) {
            const long long repaired =
                static_cast<long long>(std::llround((static_cast<double>(left) +
                                                     static_cast<double>(right)) / 2.0));
            report.outlier_fixes.push_back({recs[i].date, v, repaired});
            recs[i].reported_results = repaired;
        }
    }
    return {std::move(cleaned), std::move(report)};
}

/// Train = strictly before the boundary date, test = on/after it.
inline std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus, const Date& boundary) {
    if (corpus.empty()) throw ParseError("cannot split an empty corpus");
    const long b = day_index_of(boundary);
    const long first = corpus.front().day_index;
    const long last = corpus.back().day_index;
    if (b <= first) {
        throw ParseError("boundary " + format_date(boundary) + " leaves an empty training group");
    }
    if (b > last) {
        throw ParseError("boundary " + format_date(boundary) + " is outside the corpus range " +
                         format_date(corpus.front().date) + ".." + format_date(corpus.back().date));
    }
    Corpus train, test;
    const std::size_t cut = static_cast<std::size_t>(b - first);
    train.records.assign(corpus.records.begin(), corpus.records.begin() + static_cast<long>(cut));
    test.records.assign(corpus.records.begin() + static_cast<long>(cut), corpus.records.end());
    return {std::move(train), std::move(test)};
}

/// Mean reported results by weekday/weekend and the relative weekend
/// shortfall factor_w = (mean_weekday - mean_weekend) / mean_weekday.
inline WeekendStats weekend_stats(const Corpus& corpus) {
    double sum_wd = 0.0, sum_we = 0.0;
    std::size_t n_wd = 0, n_we = 0;
    for (const auto& r : corpus.records) {
        if (is_weekend(r.date)) {
            sum_we += static_cast<double>(r.reported_results);
            ++n_we;
        } else {
            sum_wd += static_cast<double>(r.reported_results);
            ++n_wd;
        }
    }
    if (n_wd == 0 || n_we == 0) {
        throw ParseError("weekend statistics need at least one weekday and one weekend record");
    }
    WeekendStats s;
    s.mean_weekday = sum_wd / static_cast<double>(n_wd);
    s.mean_weekend = sum_we / static_cast<double>(n_we);
    s.factor_w = (s.mean_weekday - s.mean_weekend) / s.mean_weekday;
    return s;
}

} // namespace wordlecast
