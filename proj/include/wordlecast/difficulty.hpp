#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "wordlecast/error.hpp"
#include "wordlecast/wordfeat.hpp"

namespace wordlecast::difficulty {

/// One-dimensional K-means over average-tries values.  Levels are
/// 1-based and ordered by centroid, level 1 being the easiest (lowest
/// average tries).
struct DifficultyModel {
    int k = 0;
    std::vector<double> centroids;  // strictly increasing
    std::vector<int> assignments;   // level 1..k per input value
    double mean_silhouette = 0.0;
    double wcss = 0.0;
    std::vector<double> wcss_trace; // per accepted refinement step, non-increasing
};

struct SilhouetteReport {
    std::vector<double> per_point;
    double mean = 0.0;
};

struct LevelSummary {
    int level = 0;
    int word_count = 0;
    double mean_avg_tries = 0.0;
    double mean_freq_sum = 0.0; // sum of the 5 letter frequencies, averaged
    double mean_unique_count = 0.0;
    double mean_vowel_count = 0.0;
    double mean_consonant_count = 0.0;
    double mean_has_double = 0.0;
    double mean_has_triple = 0.0;
    double mean_pos_code = 0.0;
};

struct LevelSummaryReport {
    std::vector<LevelSummary> levels;
    std::vector<int> omitted_levels; // levels with no assigned words
};

struct KSelection {
    int best_k = 0;
    std::vector<std::pair<int, double>> scores; // (k, mean silhouette)
};

/// Average number of tries implied by a 7-bucket distribution, with the
/// miss bucket counted as 7 tries.  Input need not be normalized.
inline double avg_tries(const std::array<double, 7>& pct) {
    double sum = 0.0;
    for (double v : pct) {
        if (v < 0.0) throw std::invalid_argument("avg_tries: negative bucket");
        sum += v;
    }
    if (!(sum > 0.0)) throw std::invalid_argument("avg_tries: all-zero distribution");
    double avg = 0.0;
    for (int i = 0; i < 7; ++i) avg += static_cast<double>(i + 1) * (pct[static_cast<std::size_t>(i)] / sum);
    return avg;
}

namespace detail {

inline double quantile(const std::vector<double>& sorted_values, double q) {
    const double pos = q * static_cast<double>(sorted_values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted_values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted_values[lo] * (1.0 - frac) + sorted_values[hi] * frac;
}

inline double wcss_of(const std::vector<double>& values, const std::vector<double>& centroids,
                      const std::vector<int>& assign0) {
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - centroids[static_cast<std::size_t>(assign0[i])];
        total += d * d;
    }
    return total;
}

/// Exact minimum-WCSS contiguous partition of sorted values into k
/// segments (dynamic programming over prefix sums).  The optimal 1-D
/// clustering is contiguous, so this is the global K-means optimum.
struct ContiguousPartition {
    std::vector<std::size_t> bounds; // k+1 cut positions, bounds[0]=0, bounds[k]=n
    double wcss = 0.0;
};

inline ContiguousPartition optimal_partition(const std::vector<double>& sorted_values, int k) {
    const std::size_t n = sorted_values.size();
    std::vector<double> s1(n + 1, 0.0), s2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        s1[i + 1] = s1[i] + sorted_values[i];
        s2[i + 1] = s2[i] + sorted_values[i] * sorted_values[i];
    }
    auto seg_cost = [&](std::size_t a, std::size_t b) {
        const double cnt = static_cast<double>(b - a);
        const double sum = s1[b] - s1[a];
        return (s2[b] - s2[a]) - sum * sum / cnt;
    };

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(static_cast<std::size_t>(k) + 1,
                                        std::vector<double>(n + 1, inf));
    std::vector<std::vector<std::size_t>> arg(static_cast<std::size_t>(k) + 1,
                                              std::vector<std::size_t>(n + 1, 0));
    dp[0][0] = 0.0;
    for (int j = 1; j <= k; ++j) {
        for (std::size_t i = static_cast<std::size_t>(j); i <= n; ++i) {
            for (std::size_t m = static_cast<std::size_t>(j - 1); m < i; ++m) {
                if (dp[static_cast<std::size_t>(j - 1)][m] == inf) continue;
                const double cand = dp[static_cast<std::size_t>(j - 1)][m] + seg_cost(m, i);
                if (cand < dp[static_cast<std::size_t>(j)][i]) {
                    dp[static_cast<std::size_t>(j)][i] = cand;
                    arg[static_cast<std::size_t>(j)][i] = m;
                }
            }
        }
    }

    ContiguousPartition part;
    part.wcss = dp[static_cast<std::size_t>(k)][n];
    part.bounds.assign(static_cast<std::size_t>(k) + 1, 0);
    part.bounds[static_cast<std::size_t>(k)] = n;
    for (int j = k; j >= 1; --j) {
        part.bounds[static_cast<std::size_t>(j - 1)] =
            arg[static_cast<std::size_t>(j)][part.bounds[static_cast<std::size_t>(j)]];
    }
    return part;
}

} // namespace detail

/// Lloyd's algorithm from deterministic quantile seeds (centroid j at
/// the (j-0.5)/k quantile), iterated to an assignment fixpoint, then
/// refined with the exact contiguous-partition optimum; quantile-seeded
/// Lloyd alone can stall in a local minimum on small instances, and the
/// refinement target is itself a Lloyd fixpoint.
inline SilhouetteReport silhouette(const std::vector<double>& values,
                                   const std::vector<int>& assignments);

inline DifficultyModel kmeans_1d(const std::vector<double>& values, int k) {
    if (k < 2) throw std::invalid_argument("kmeans_1d: k must be >= 2");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("kmeans_1d: non-finite value");
    }
    std::vector<double> sorted_values = values;
    std::sort(sorted_values.begin(), sorted_values.end());
    const std::size_t distinct = static_cast<std::size_t>(
        std::unique(sorted_values.begin(), sorted_values.end()) - sorted_values.begin());
    sorted_values.assign(values.begin(), values.end());
    std::sort(sorted_values.begin(), sorted_values.end());
    if (distinct < static_cast<std::size_t>(k)) {
        throw std::invalid_argument("kmeans_1d: k exceeds the number of distinct values");
    }

    const std::size_t n = values.size();
    std::vector<double> centroids(static_cast<std::size_t>(k), 0.0);
    for (int j = 0; j < k; ++j) {
        centroids[static_cast<std::size_t>(j)] =
            detail::quantile(sorted_values, (static_cast<double>(j) + 0.5) / static_cast<double>(k));
    }

    DifficultyModel model;
    model.k = k;
    std::vector<int> assign(n, -1);
    for (int iter = 0; iter < 1000; ++iter) {
        std::vector<int> next(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            int best = 0;
            double bd = std::fabs(values[i] - centroids[0]);
            for (int j = 1; j < k; ++j) {
                const double d = std::fabs(values[i] - centroids[static_cast<std::size_t>(j)]);
                if (d < bd) {
                    best = j;
                    bd = d;
                }
            }
            next[i] = best;
        }
        // relocate any emptied centroid to the worst-fit point
        bool repaired = false;
        for (int j = 0; j < k; ++j) {
            if (std::find(next.begin(), next.end(), j) != next.end()) continue;
            std::size_t far_i = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = std::fabs(values[i] - centroids[static_cast<std::size_t>(next[i])]);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            centroids[static_cast<std::size_t>(j)] = values[far_i];
            next[far_i] = j;
            repaired = true;
        }
        const bool fixpoint = !repaired && next == assign;
        assign = std::move(next);
        for (int j = 0; j < k; ++j) {
            double sum = 0.0;
            std::size_t cnt = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assign[i] == j) {
                    sum += values[i];
                    ++cnt;
                }
            }
            if (cnt > 0) centroids[static_cast<std::size_t>(j)] = sum / static_cast<double>(cnt);
        }
        model.wcss_trace.push_back(detail::wcss_of(values, centroids, assign));
        if (fixpoint) break;
    }

    double lloyd_wcss = detail::wcss_of(values, centroids, assign);
    const auto part = detail::optimal_partition(sorted_values, k);
    if (part.wcss < lloyd_wcss - 1e-12 * std::max(1.0, lloyd_wcss)) {
        for (int j = 0; j < k; ++j) {
            const std::size_t a = part.bounds[static_cast<std::size_t>(j)];
            const std::size_t b = part.bounds[static_cast<std::size_t>(j + 1)];
            double sum = 0.0;
            for (std::size_t i = a; i < b; ++i) sum += sorted_values[i];
            centroids[static_cast<std::size_t>(j)] = sum / static_cast<double>(b - a);
        }
        // map each point to its segment's level via position in sorted order
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        int seg = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            while (pos >= part.bounds[static_cast<std::size_t>(seg + 1)]) ++seg;
            assign[idx[pos]] = seg;
        }
        model.wcss_trace.push_back(part.wcss);
        lloyd_wcss = part.wcss;
    }

    // order levels by centroid
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return centroids[static_cast<std::size_t>(a)] < centroids[static_cast<std::size_t>(b)]; });
    std::vector<int> rank(static_cast<std::size_t>(k), 0);
    for (int r = 0; r < k; ++r) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = r;

    model.centroids.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        model.centroids[static_cast<std::size_t>(rank[static_cast<std::size_t>(j)])] =
            centroids[static_cast<std::size_t>(j)];
    }
    for (int j = 0; j + 1 < k; ++j) {
        if (!(model.centroids[static_cast<std::size_t>(j)] < model.centroids[static_cast<std::size_t>(j + 1)])) {
            throw ComputeError("kmeans_1d: degenerate solution with duplicate centroids");
        }
    }
    model.assignments.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        model.assignments[i] = rank[static_cast<std::size_t>(assign[i])] + 1;
    }
    model.wcss = lloyd_wcss;
    model.mean_silhouette = silhouette(values, model.assignments).mean;
    return model;
}

/// Silhouette scores: a(i) is the mean distance to the rest of the own
/// cluster (0 for singletons), b(i) the smallest mean distance to any
/// other cluster, s(i) = (b - a) / max(a, b).
inline SilhouetteReport silhouette(const std::vector<double>& values,
                                   const std::vector<int>& assignments) {
    if (values.size() != assignments.size() || values.empty()) {
        throw std::invalid_argument("silhouette: matched non-empty inputs required");
    }
    int k = 0;
    for (int a : assignments) {
        if (a < 1) throw std::invalid_argument("silhouette: assignments must be 1-based levels");
        k = std::max(k, a);
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (int a : assignments) ++counts[static_cast<std::size_t>(a - 1)];
    std::size_t populated = 0;
    for (std::size_t c : counts) {
        if (c > 0) ++populated;
    }
    if (populated < 2) throw std::invalid_argument("silhouette: need at least 2 non-empty clusters");

    SilhouetteReport rep;
    rep.per_point.resize(values.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<double> dist_sum(static_cast<std::size_t>(k), 0.0);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j == i) continue;
            dist_sum[static_cast<std::size_t>(assignments[j] - 1)] += std::fabs(values[i] - values[j]);
        }
        const std::size_t own = static_cast<std::size_t>(assignments[i] - 1);
        double s = 0.0;
        if (counts[own] > 1) {
            const double a = dist_sum[own] / static_cast<double>(counts[own] - 1);
            double b = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
                if (c == own || counts[c] == 0) continue;
                b = std::min(b, dist_sum[c] / static_cast<double>(counts[c]));
            }
            const double denom = std::max(a, b);
            s = denom > 0.0 ? (b - a) / denom : 0.0;
        }
        rep.per_point[i] = s;
        total += s;
    }
    rep.mean = total / static_cast<double>(values.size());
    return rep;
}

/// Fits every k in [k_min, k_max] and keeps the one with the highest
/// mean silhouette (ties go to the smaller k).
inline KSelection select_k(const std::vector<double>& values, int k_min, int k_max) {
    if (k_min < 2 || k_max < k_min) throw std::invalid_argument("select_k: need 2 <= k_min <= k_max");
    KSelection sel;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int k = k_min; k <= k_max; ++k) {
        const auto model = kmeans_1d(values, k);
        sel.scores.emplace_back(k, model.mean_silhouette);
        if (model.mean_silhouette > best_score) {
            best_score = model.mean_silhouette;
            sel.best_k = k;
        }
    }
    return sel;
}

/// Level of the nearest centroid; midpoints resolve to the higher
/// (harder) level.
inline int classify(double avg, const DifficultyModel& model) {
    if (!std::isfinite(avg)) throw std::invalid_argument("classify: non-finite input");
    if (model.centroids.empty()) throw std::invalid_argument("classify: model not fitted");
    int best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < model.k; ++j) {
        const double d = std::fabs(avg - model.centroids[static_cast<std::size_t>(j)]);
        if (d <= bd) { // tie keeps the later (higher) level
            bd = d;
            best = j;
        }
    }
    return best + 1;
}

/// Per-level feature means; levels with no members are omitted and
/// listed separately.
inline LevelSummaryReport level_summary(const std::vector<words::WordFeatures>& features,
                                        const std::vector<double>& tries_values,
                                        const std::vector<int>& assignments, int k) {
    if (features.size() != assignments.size() || features.size() != tries_values.size()) {
        throw std::invalid_argument("level_summary: input sizes differ");
    }
    LevelSummaryReport report;
    for (int level = 1; level <= k; ++level) {
        LevelSummary s;
        s.level = level;
        double freq_sum = 0.0;
        for (std::size_t i = 0; i < features.size(); ++i) {
            if (assignments[i] != level) continue;
            ++s.word_count;
            s.mean_avg_tries += tries_values[i];
            double fs = 0.0;
            for (double f : features[i].letter_freqs) fs += f;
            freq_sum += fs;
            s.mean_unique_count += features[i].unique_count;
            s.mean_vowel_count += features[i].vowel_count;
            s.mean_consonant_count += features[i].consonant_count;
            s.mean_has_double += features[i].has_double;
            s.mean_has_triple += features[i].has_triple;
            s.mean_pos_code += features[i].pos_code;
        }
        if (s.word_count == 0) {
            report.omitted_levels.push_back(level);
            continue;
        }
        const double cnt = static_cast<double>(s.word_count);
        s.mean_avg_tries /= cnt;
        s.mean_freq_sum = freq_sum / cnt;
        s.mean_unique_count /= cnt;
        s.mean_vowel_count /= cnt;
        s.mean_consonant_count /= cnt;
        s.mean_has_double /= cnt;
        s.mean_has_triple /= cnt;
        s.mean_pos_code /= cnt;
        report.levels.push_back(s);
    }
    return report;
}

} // namespace wordlecast::difficulty
