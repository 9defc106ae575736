#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "wordlecast/csv.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/pos_words.hpp"

namespace wordlecast::words {

inline bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline void validate_word(const std::string& word) {
    if (word.size() != 5) throw std::invalid_argument("word must have exactly 5 letters: '" + word + "'");
    for (char c : word) {
        if (c < 'a' || c > 'z') {
            throw std::invalid_argument("word must be lowercase a-z: '" + word + "'");
        }
    }
}

/// Relative frequency of each letter across a word list (denominator is
/// total letters, so the table sums to 1).
struct LetterFrequencyTable {
    std::array<double, 26> freq{};

    double of(char c) const { return freq[static_cast<std::size_t>(c - 'a')]; }
};

inline LetterFrequencyTable build_letter_frequency(const std::vector<std::string>& corpus_words) {
    if (corpus_words.empty()) throw std::invalid_argument("build_letter_frequency: empty word list");
    LetterFrequencyTable table;
    std::array<long, 26> counts{};
    long total = 0;
    for (const auto& w : corpus_words) {
        validate_word(w);
        for (char c : w) {
            ++counts[static_cast<std::size_t>(c - 'a')];
            ++total;
        }
    }
    for (std::size_t i = 0; i < 26; ++i) {
        table.freq[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return table;
}

/// Maps words to part-of-speech codes; unknown words code to 0.
class PosLexicon {
public:
    static PosLexicon embedded() {
        PosLexicon lex;
        std::size_t n = 0;
        const PosEntry* table = embedded_pos_table(&n);
        lex.map_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) lex.map_.emplace(table[i].word, table[i].code);
        return lex;
    }

    /// Loads "word,code" lines (no header).  Codes must be 0..5.
    static PosLexicon from_file(const std::string& path) {
        PosLexicon lex;
        const auto lines = split_lines(read_text_file(path));
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            const auto fields = split_csv_line(lines[i]);
            if (fields.size() != 2) {
                throw ParseError("pos lexicon line " + std::to_string(i + 1) + ": expected word,code");
            }
            validate_word(fields[0]);
            const long code = parse_count(fields[1], "pos lexicon line " + std::to_string(i + 1));
            if (code > 5) {
                throw ParseError("pos lexicon line " + std::to_string(i + 1) + ": code must be 0..5");
            }
            lex.map_[fields[0]] = static_cast<int>(code);
        }
        return lex;
    }

    int lookup(const std::string& word) const {
        const auto it = map_.find(word);
        return it == map_.end() ? 0 : it->second;
    }

    std::size_t size() const { return map_.size(); }

private:
    std::unordered_map<std::string, int> map_;
};

/// Engineered per-word attributes.  vowel_count + consonant_count is
/// always 5; the consonant count is kept for summaries but carries no
/// extra information, so the model input vector omits it.
struct WordFeatures {
    long day_index = 0;
    std::array<int, 5> letter_ordinals{};  // a=1 .. z=26
    std::array<double, 5> letter_freqs{};
    int unique_count = 0;
    int vowel_count = 0;
    int consonant_count = 0;
    int has_double = 0; // some letter appears exactly twice
    int has_triple = 0; // some letter appears three or more times
    int pos_code = 0;
};

inline WordFeatures extract_features(const std::string& word, long day_index,
                                     const LetterFrequencyTable& freq, const PosLexicon& pos) {
    validate_word(word);
    WordFeatures f;
    f.day_index = day_index;
    std::array<int, 26> counts{};
    for (std::size_t i = 0; i < 5; ++i) {
        const char c = word[i];
        f.letter_ordinals[i] = c - 'a' + 1;
        f.letter_freqs[i] = freq.of(c);
        ++counts[static_cast<std::size_t>(c - 'a')];
        if (is_vowel(c)) ++f.vowel_count;
    }
    f.consonant_count = 5 - f.vowel_count;
    for (int c : counts) {
        if (c > 0) ++f.unique_count;
        if (c == 2) f.has_double = 1;
        if (c >= 3) f.has_triple = 1;
    }
    f.pos_code = pos.lookup(word);
    return f;
}

/// Full16 is the model input; Table3Only11 drops the derived counts and
/// flags, keeping day index, letter ordinals, and letter frequencies.
enum class FeatureSet { Full16, Table3Only11 };

inline std::size_t feature_count(FeatureSet set) {
    return set == FeatureSet::Full16 ? 16 : 11;
}

inline std::vector<double> feature_vector(const WordFeatures& f, FeatureSet set = FeatureSet::Full16) {
    std::vector<double> v;
    v.reserve(feature_count(set));
    v.push_back(static_cast<double>(f.day_index));
    for (int o : f.letter_ordinals) v.push_back(static_cast<double>(o));
    for (double q : f.letter_freqs) v.push_back(q);
    if (set == FeatureSet::Full16) {
        v.push_back(static_cast<double>(f.unique_count));
        v.push_back(static_cast<double>(f.vowel_count));
        v.push_back(static_cast<double>(f.has_double));
        v.push_back(static_cast<double>(f.has_triple));
        v.push_back(static_cast<double>(f.pos_code));
    }
    return v;
}

/// Column-wise min/max captured on training data so that later inputs
/// scale identically.
struct ScalingRecord {
    std::vector<double> min;
    std::vector<double> max;
};

/// Scales each column to [0,1].  Constant columns map to 0.5.
inline std::vector<std::vector<double>> normalize_features(const std::vector<std::vector<double>>& rows,
                                                           ScalingRecord* record) {
    if (rows.size() < 2) throw std::invalid_argument("normalize_features: need at least 2 rows");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("normalize_features: ragged rows");
    }
    ScalingRecord rec;
    rec.min.assign(cols, 0.0);
    rec.max.assign(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double lo = rows[0][j], hi = rows[0][j];
        for (const auto& r : rows) {
            lo = std::min(lo, r[j]);
            hi = std::max(hi, r[j]);
        }
        rec.min[j] = lo;
        rec.max[j] = hi;
    }
    std::vector<std::vector<double>> out(rows.size(), std::vector<double>(cols, 0.0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double span = rec.max[j] - rec.min[j];
            out[i][j] = span > 0.0 ? (rows[i][j] - rec.min[j]) / span : 0.5;
        }
    }
    if (record) *record = rec;
    return out;
}

/// Inverse of the stored scaling.  Constant columns recover their
/// original value exactly.
inline std::vector<double> invert_scaling(const ScalingRecord& rec, const std::vector<double>& row) {
    if (row.size() != rec.min.size()) throw std::invalid_argument("invert_scaling: size mismatch");
    std::vector<double> out(row.size(), 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double span = rec.max[j] - rec.min[j];
        out[j] = span > 0.0 ? rec.min[j] + row[j] * span : rec.min[j];
    }
    return out;
}

/// Applies a stored scaling to one row, clamping out-of-range values
/// into [0,1] (sets *clamped when that happens).
inline std::vector<double> apply_scaling(const ScalingRecord& rec, const std::vector<double>& row,
                                         bool* clamped = nullptr) {
    if (row.size() != rec.min.size()) throw std::invalid_argument("apply_scaling: size mismatch");
    if (clamped) *clamped = false;
    std::vector<double> out(row.size(), 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
        const double span = rec.max[j] - rec.min[j];
        if (span > 0.0) {
            double v = (row[j] - rec.min[j]) / span;
            if (v < 0.0 || v > 1.0) {
                v = std::min(1.0, std::max(0.0, v));
                if (clamped) *clamped = true;
            }
            out[j] = v;
        } else {
            out[j] = 0.5;
        }
    }
    return out;
}

} // namespace wordlecast::words
