#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wordlecast/error.hpp"
#include "wordlecast/rng.hpp"
#include "wordlecast/wordfeat.hpp"

namespace wordlecast::neural {

constexpr int kBuckets = 7;

/// Feed-forward network: logistic-sigmoid hidden layers, normalized
/// exponential output over the 7 tries buckets.  Weight matrices are
/// stored row-major as weights[layer][out * fan_in + in].
struct MlpModel {
    std::vector<int> layer_sizes;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
    unsigned long long seed = 0;
    int epochs_trained = 0;

    std::size_t layer_count() const { return weights.size(); }
    int input_size() const { return layer_sizes.front(); }
};

struct TrainingConfig {
    int max_epochs = 1000;
    double learning_rate = 0.05;
    int batch_size = 16;
    int patience = 50;
    double validation_fraction = 0.15;

    void validate() const {
        if (max_epochs < 1) throw std::invalid_argument("max_epochs must be >= 1");
        if (!(learning_rate > 0.0)) throw std::invalid_argument("learning_rate must be > 0");
        if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
        if (patience < 1) throw std::invalid_argument("patience must be >= 1");
        if (validation_fraction < 0.0 || validation_fraction >= 1.0) {
            throw std::invalid_argument("validation_fraction must lie in [0, 1)");
        }
    }
};

struct DistributionPrediction {
    std::array<double, kBuckets> pct{}; // buckets 1..6 and X, summing to 100
    double avg_tries = 0.0;             // X counted as 7 tries
};

struct EvalReport {
    std::vector<double> per_word_error;
    double overall_w = 0.0;
    std::array<double, kBuckets> bucket_breakdown{};
};

struct TrainLog {
    std::vector<double> train_loss; // per epoch, measured after the epoch's updates
    std::vector<double> val_loss;
    int early_stop_epoch = -1; // epoch index that triggered the stop, -1 if none
    int best_epoch = -1;       // epoch whose weights the model keeps
};

// ---------------------------------------------------------------------------
// initialization and forward pass
// ---------------------------------------------------------------------------

inline MlpModel init_mlp(const std::vector<int>& layer_sizes, unsigned long long seed) {
    if (layer_sizes.size() < 3) {
        throw std::invalid_argument("init_mlp: need input, at least one hidden, and output layer");
    }
    for (int s : layer_sizes) {
        if (s < 1) throw std::invalid_argument("init_mlp: layer sizes must be positive");
    }
    if (layer_sizes.back() != kBuckets) {
        throw std::invalid_argument("init_mlp: output layer must have exactly 7 units");
    }
    MlpModel model;
    model.layer_sizes = layer_sizes;
    model.seed = seed;
    Rng rng(seed);
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const int fan_in = layer_sizes[l];
        const int fan_out = layer_sizes[l + 1];
        const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
        std::vector<double> w(static_cast<std::size_t>(fan_in) * static_cast<std::size_t>(fan_out));
        for (double& v : w) v = rng.uniform(-bound, bound);
        model.weights.push_back(std::move(w));
        model.biases.emplace_back(static_cast<std::size_t>(fan_out), 0.0);
    }
    return model;
}

namespace detail {

inline double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// Activations per layer: [0] is the input, the last entry holds the
/// output probabilities (softmax, fractions summing to 1).
inline std::vector<std::vector<double>> forward_pass(const MlpModel& model,
                                                     const std::vector<double>& input) {
    if (static_cast<int>(input.size()) != model.input_size()) {
        throw std::invalid_argument("forward: input length does not match the input layer");
    }
    std::vector<std::vector<double>> acts;
    acts.reserve(model.layer_count() + 1);
    acts.push_back(input);
    for (std::size_t l = 0; l < model.layer_count(); ++l) {
        const int fan_in = model.layer_sizes[l];
        const int fan_out = model.layer_sizes[l + 1];
        const auto& prev = acts.back();
        std::vector<double> z(static_cast<std::size_t>(fan_out), 0.0);
        for (int o = 0; o < fan_out; ++o) {
            double acc = model.biases[l][static_cast<std::size_t>(o)];
            const double* wrow = model.weights[l].data() +
                                 static_cast<std::size_t>(o) * static_cast<std::size_t>(fan_in);
            for (int i = 0; i < fan_in; ++i) acc += wrow[i] * prev[static_cast<std::size_t>(i)];
            z[static_cast<std::size_t>(o)] = acc;
        }
        if (l + 1 < model.layer_count()) {
            for (double& v : z) v = sigmoid(v);
        } else {
            const double zmax = *std::max_element(z.begin(), z.end());
            double sum = 0.0;
            for (double& v : z) {
                v = std::exp(v - zmax);
                sum += v;
            }
            for (double& v : z) v /= sum;
        }
        acts.push_back(std::move(z));
    }
    return acts;
}

/// Cross-entropy against a target distribution expressed as fractions.
inline double cross_entropy(const std::vector<double>& probs, const std::array<double, kBuckets>& t) {
    double loss = 0.0;
    for (int j = 0; j < kBuckets; ++j) {
        loss -= t[static_cast<std::size_t>(j)] *
                std::log(std::max(probs[static_cast<std::size_t>(j)], 1e-300));
    }
    return loss;
}

inline std::array<double, kBuckets> to_fractions(const std::array<double, kBuckets>& pct) {
    double sum = 0.0;
    for (double v : pct) {
        if (v < 0.0) throw std::invalid_argument("target distribution has a negative bucket");
        sum += v;
    }
    if (!(sum > 0.0)) throw std::invalid_argument("target distribution sums to zero");
    std::array<double, kBuckets> f{};
    for (int j = 0; j < kBuckets; ++j) f[static_cast<std::size_t>(j)] = pct[static_cast<std::size_t>(j)] / sum;
    return f;
}

} // namespace detail

inline DistributionPrediction forward(const MlpModel& model, const std::vector<double>& input) {
    const auto acts = detail::forward_pass(model, input);
    const auto& probs = acts.back();
    DistributionPrediction pred;
    double avg = 0.0;
    for (int j = 0; j < kBuckets; ++j) {
        pred.pct[static_cast<std::size_t>(j)] = 100.0 * probs[static_cast<std::size_t>(j)];
        avg += static_cast<double>(j + 1) * probs[static_cast<std::size_t>(j)];
    }
    pred.avg_tries = avg;
    return pred;
}

// ---------------------------------------------------------------------------
// gradients
// ---------------------------------------------------------------------------

struct Gradients {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
};

/// Analytic backpropagation gradient of the cross-entropy loss for one
/// row (target given as percentages; normalized internally).
inline Gradients compute_gradients(const MlpModel& model, const std::vector<double>& input,
                                   const std::array<double, kBuckets>& target_pct) {
    const auto t = detail::to_fractions(target_pct);
    const auto acts = detail::forward_pass(model, input);
    const std::size_t layers = model.layer_count();

    Gradients g;
    g.weights.resize(layers);
    g.biases.resize(layers);
    for (std::size_t l = 0; l < layers; ++l) {
        g.weights[l].assign(model.weights[l].size(), 0.0);
        g.biases[l].assign(model.biases[l].size(), 0.0);
    }

    // softmax + cross-entropy: dL/dz = p - t
    std::vector<double> delta(static_cast<std::size_t>(kBuckets), 0.0);
    for (int j = 0; j < kBuckets; ++j) {
        delta[static_cast<std::size_t>(j)] = acts.back()[static_cast<std::size_t>(j)] -
                                             t[static_cast<std::size_t>(j)];
    }

    for (std::size_t l = layers; l-- > 0;) {
        const int fan_in = model.layer_sizes[l];
        const int fan_out = model.layer_sizes[l + 1];
        const auto& prev = acts[l];
        for (int o = 0; o < fan_out; ++o) {
            const double d = delta[static_cast<std::size_t>(o)];
            g.biases[l][static_cast<std::size_t>(o)] = d;
            double* grow = g.weights[l].data() +
                           static_cast<std::size_t>(o) * static_cast<std::size_t>(fan_in);
            for (int i = 0; i < fan_in; ++i) grow[i] = d * prev[static_cast<std::size_t>(i)];
        }
        if (l == 0) break;
        std::vector<double> next(static_cast<std::size_t>(fan_in), 0.0);
        for (int i = 0; i < fan_in; ++i) {
            double acc = 0.0;
            for (int o = 0; o < fan_out; ++o) {
                acc += model.weights[l][static_cast<std::size_t>(o) * static_cast<std::size_t>(fan_in) +
                                        static_cast<std::size_t>(i)] *
                       delta[static_cast<std::size_t>(o)];
            }
            const double a = prev[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] = acc * a * (1.0 - a);
        }
        delta = std::move(next);
    }
    return g;
}

/// Central finite-difference gradient over every parameter.
inline Gradients numeric_gradients(const MlpModel& model, const std::vector<double>& input,
                                   const std::array<double, kBuckets>& target_pct,
                                   double step = 1e-5) {
    const auto t = detail::to_fractions(target_pct);
    MlpModel work = model;
    auto loss_at = [&]() {
        const auto acts = detail::forward_pass(work, input);
        return detail::cross_entropy(acts.back(), t);
    };

    Gradients g;
    g.weights.resize(model.layer_count());
    g.biases.resize(model.layer_count());
    for (std::size_t l = 0; l < model.layer_count(); ++l) {
        g.weights[l].assign(model.weights[l].size(), 0.0);
        for (std::size_t i = 0; i < work.weights[l].size(); ++i) {
            const double orig = work.weights[l][i];
            work.weights[l][i] = orig + step;
            const double up = loss_at();
            work.weights[l][i] = orig - step;
            const double down = loss_at();
            work.weights[l][i] = orig;
            g.weights[l][i] = (up - down) / (2.0 * step);
        }
        g.biases[l].assign(model.biases[l].size(), 0.0);
        for (std::size_t i = 0; i < work.biases[l].size(); ++i) {
            const double orig = work.biases[l][i];
            work.biases[l][i] = orig + step;
            const double up = loss_at();
            work.biases[l][i] = orig - step;
            const double down = loss_at();
            work.biases[l][i] = orig;
            g.biases[l][i] = (up - down) / (2.0 * step);
        }
    }
    return g;
}

/// Largest relative deviation between two gradient sets, floored at
/// 1e-4 absolute so near-zero gradients do not inflate the ratio.
inline double max_relative_deviation(const Gradients& a, const Gradients& b) {
    double worst = 0.0;
    auto scan = [&](const std::vector<std::vector<double>>& xs,
                    const std::vector<std::vector<double>>& ys) {
        for (std::size_t l = 0; l < xs.size(); ++l) {
            for (std::size_t i = 0; i < xs[l].size(); ++i) {
                const double denom = std::max({std::fabs(xs[l][i]), std::fabs(ys[l][i]), 1e-4});
                worst = std::max(worst, std::fabs(xs[l][i] - ys[l][i]) / denom);
            }
        }
    };
    scan(a.weights, b.weights);
    scan(a.biases, b.biases);
    return worst;
}

inline double gradient_check(const MlpModel& model, const std::vector<double>& input,
                             const std::array<double, kBuckets>& target_pct) {
    return max_relative_deviation(compute_gradients(model, input, target_pct),
                                  numeric_gradients(model, input, target_pct));
}

// ---------------------------------------------------------------------------
// training
// ---------------------------------------------------------------------------

/// Mini-batch gradient descent on cross-entropy with a deterministic
/// per-epoch shuffle derived from the model seed.  The last
/// validation_fraction of the rows is held out; training stops early
/// when validation loss fails to improve for `patience` epochs and the
/// best-epoch weights are restored.  Non-finite loss aborts.
inline TrainLog train(MlpModel& model, const std::vector<std::vector<double>>& inputs,
                      const std::vector<std::array<double, kBuckets>>& targets_pct,
                      const TrainingConfig& config) {
    config.validate();
    if (inputs.size() != targets_pct.size()) throw std::invalid_argument("train: row count mismatch");
    if (inputs.size() < 10) throw std::invalid_argument("train: need at least 10 rows");

    const std::size_t n = inputs.size();
    std::vector<std::array<double, kBuckets>> targets(n);
    for (std::size_t i = 0; i < n; ++i) targets[i] = detail::to_fractions(targets_pct[i]);

    std::size_t val_n = static_cast<std::size_t>(config.validation_fraction * static_cast<double>(n));
    if (config.validation_fraction > 0.0 && val_n == 0) val_n = 1;
    const std::size_t train_n = n - val_n;
    if (train_n < 1) throw std::invalid_argument("train: validation split leaves no training rows");

    auto mean_loss = [&](std::size_t begin, std::size_t end) {
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const auto acts = detail::forward_pass(model, inputs[i]);
            sum += detail::cross_entropy(acts.back(), targets[i]);
        }
        return sum / static_cast<double>(end - begin);
    };

    Rng shuffle_rng(model.seed + 1);
    std::vector<std::size_t> order(train_n);
    std::iota(order.begin(), order.end(), std::size_t{0});

    TrainLog log;
    double best_val = std::numeric_limits<double>::infinity();
    MlpModel best_model = model;
    int best_epoch = -1;
    int stale = 0;

    for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        for (std::size_t start = 0; start < train_n; start += static_cast<std::size_t>(config.batch_size)) {
            const std::size_t stop = std::min(train_n, start + static_cast<std::size_t>(config.batch_size));
            Gradients acc;
            bool first = true;
            for (std::size_t b = start; b < stop; ++b) {
                const std::size_t row = order[b];
                Gradients g = compute_gradients(model, inputs[row], targets_pct[row]);
                if (first) {
                    acc = std::move(g);
                    first = false;
                } else {
                    for (std::size_t l = 0; l < acc.weights.size(); ++l) {
                        for (std::size_t i = 0; i < acc.weights[l].size(); ++i) acc.weights[l][i] += g.weights[l][i];
                        for (std::size_t i = 0; i < acc.biases[l].size(); ++i) acc.biases[l][i] += g.biases[l][i];
                    }
                }
            }
            const double scale = config.learning_rate / static_cast<double>(stop - start);
            for (std::size_t l = 0; l < model.weights.size(); ++l) {
                for (std::size_t i = 0; i < model.weights[l].size(); ++i) model.weights[l][i] -= scale * acc.weights[l][i];
                for (std::size_t i = 0; i < model.biases[l].size(); ++i) model.biases[l][i] -= scale * acc.biases[l][i];
            }
        }

        const double tl = mean_loss(0, train_n);
        log.train_loss.push_back(tl);
        if (!std::isfinite(tl)) throw ComputeError("train: loss diverged at epoch " + std::to_string(epoch));
        model.epochs_trained = epoch + 1;

        if (val_n > 0) {
            const double vl = mean_loss(train_n, n);
            log.val_loss.push_back(vl);
            if (!std::isfinite(vl)) throw ComputeError("train: validation loss diverged at epoch " + std::to_string(epoch));
            if (vl < best_val) {
                best_val = vl;
                best_model = model;
                best_epoch = epoch;
                stale = 0;
            } else {
                ++stale;
                if (stale >= config.patience) {
                    log.early_stop_epoch = epoch;
                    break;
                }
            }
        }
    }

    if (val_n > 0 && best_epoch >= 0) {
        const int trained = model.epochs_trained;
        model = best_model;
        model.epochs_trained = trained;
        log.best_epoch = best_epoch;
    } else {
        log.best_epoch = model.epochs_trained - 1;
    }
    return log;
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

/// Per-word error: mean over the 7 buckets of |predicted - actual| on
/// the percent scale, each divided by max(actual, 1) so empty buckets
/// stay defined.  overall_w is the mean across words.
inline EvalReport evaluate(const MlpModel& model, const std::vector<std::vector<double>>& inputs,
                           const std::vector<std::array<double, kBuckets>>& targets_pct) {
    if (inputs.empty() || inputs.size() != targets_pct.size()) {
        throw std::invalid_argument("evaluate: need non-empty matched inputs and targets");
    }
    EvalReport rep;
    rep.per_word_error.reserve(inputs.size());
    std::array<double, kBuckets> bucket_sum{};
    double total = 0.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const auto pred = forward(model, inputs[i]);
        double word_err = 0.0;
        for (int j = 0; j < kBuckets; ++j) {
            const double actual = targets_pct[i][static_cast<std::size_t>(j)];
            const double e = std::fabs(pred.pct[static_cast<std::size_t>(j)] - actual) /
                             std::max(actual, 1.0);
            word_err += e;
            bucket_sum[static_cast<std::size_t>(j)] += e;
        }
        word_err /= static_cast<double>(kBuckets);
        rep.per_word_error.push_back(word_err);
        total += word_err;
    }
    rep.overall_w = total / static_cast<double>(inputs.size());
    for (int j = 0; j < kBuckets; ++j) {
        rep.bucket_breakdown[static_cast<std::size_t>(j)] =
            bucket_sum[static_cast<std::size_t>(j)] / static_cast<double>(inputs.size());
    }
    return rep;
}

// ---------------------------------------------------------------------------
// cross-validation
// ---------------------------------------------------------------------------

struct CrossValidationResult {
    EvalReport forward_split;
    EvalReport flipped_split;
    MlpModel forward_model;
    MlpModel flipped_model;
    words::ScalingRecord forward_scaling;
    words::ScalingRecord flipped_scaling;
};

namespace detail {

struct Arm {
    EvalReport report;
    MlpModel model;
    words::ScalingRecord scaling;
};

inline Arm run_arm(const std::vector<std::vector<double>>& raw_features,
                   const std::vector<std::array<double, kBuckets>>& targets,
                   std::size_t train_begin, std::size_t train_end, std::size_t test_begin,
                   std::size_t test_end, const std::vector<int>& hidden_sizes,
                   const TrainingConfig& config, unsigned long long seed) {
    std::vector<std::vector<double>> train_rows(raw_features.begin() + static_cast<long>(train_begin),
                                                raw_features.begin() + static_cast<long>(train_end));
    std::vector<std::array<double, kBuckets>> train_targets(
        targets.begin() + static_cast<long>(train_begin), targets.begin() + static_cast<long>(train_end));

    Arm arm;
    const auto norm = words::normalize_features(train_rows, &arm.scaling);

    std::vector<int> sizes;
    sizes.push_back(static_cast<int>(raw_features[0].size()));
    for (int h : hidden_sizes) sizes.push_back(h);
    sizes.push_back(kBuckets);
    arm.model = init_mlp(sizes, seed);
    train(arm.model, norm, train_targets, config);

    std::vector<std::vector<double>> test_rows;
    std::vector<std::array<double, kBuckets>> test_targets;
    test_rows.reserve(test_end - test_begin);
    for (std::size_t i = test_begin; i < test_end; ++i) {
        test_rows.push_back(words::apply_scaling(arm.scaling, raw_features[i]));
        test_targets.push_back(targets[i]);
    }
    arm.report = evaluate(arm.model, test_rows, test_targets);
    return arm;
}

} // namespace detail

/// Trains on the first n-test_size rows / tests on the rest, then the
/// flipped arrangement (train on the last n-test_size, test on the
/// first test_size).  Features arrive unscaled; each arm normalizes on
/// its own training rows.
inline CrossValidationResult cross_validate(const std::vector<std::vector<double>>& raw_features,
                                            const std::vector<std::array<double, kBuckets>>& targets,
                                            const TrainingConfig& config, unsigned long long seed,
                                            std::size_t test_size = 59,
                                            const std::vector<int>& hidden_sizes = {32, 16}) {
    const std::size_t n = raw_features.size();
    if (n != targets.size()) throw std::invalid_argument("cross_validate: row count mismatch");
    if (n < 100) throw std::invalid_argument("cross_validate: need at least 100 rows");
    if (test_size + 10 > n) throw std::invalid_argument("cross_validate: test_size too large");

    const std::size_t train_n = n - test_size;
    auto fwd = detail::run_arm(raw_features, targets, 0, train_n, train_n, n, hidden_sizes, config, seed);
    auto flp = detail::run_arm(raw_features, targets, test_size, n, 0, test_size, hidden_sizes, config, seed);

    CrossValidationResult res;
    res.forward_split = std::move(fwd.report);
    res.forward_model = std::move(fwd.model);
    res.forward_scaling = std::move(fwd.scaling);
    res.flipped_split = std::move(flp.report);
    res.flipped_model = std::move(flp.model);
    res.flipped_scaling = std::move(flp.scaling);
    return res;
}

// ---------------------------------------------------------------------------
// collapse detection
// ---------------------------------------------------------------------------

struct CollapseCheck {
    bool early_stopped_before_100 = false;
    double prediction_variance = 0.0;
    double target_variance = 0.0;
    bool collapsed = false;
};

/// Detects the converge-to-a-point failure: training that bails out
/// before epoch 100 while test predictions vary less than half as much
/// as the targets (mean per-bucket variance across test words).
inline CollapseCheck collapse_check(const TrainLog& log, const MlpModel& model,
                                    const std::vector<std::vector<double>>& test_inputs,
                                    const std::vector<std::array<double, kBuckets>>& test_targets) {
    if (test_inputs.empty() || test_inputs.size() != test_targets.size()) {
        throw std::invalid_argument("collapse_check: need non-empty matched inputs and targets");
    }
    const std::size_t n = test_inputs.size();
    std::vector<std::array<double, kBuckets>> preds(n);
    for (std::size_t i = 0; i < n; ++i) preds[i] = forward(model, test_inputs[i]).pct;

    auto mean_bucket_variance = [n](const std::vector<std::array<double, kBuckets>>& rows) {
        double total = 0.0;
        for (int j = 0; j < kBuckets; ++j) {
            double mean = 0.0;
            for (const auto& r : rows) mean += r[static_cast<std::size_t>(j)];
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (const auto& r : rows) {
                const double d = r[static_cast<std::size_t>(j)] - mean;
                var += d * d;
            }
            total += var / static_cast<double>(n);
        }
        return total / static_cast<double>(kBuckets);
    };

    CollapseCheck check;
    check.early_stopped_before_100 = log.early_stop_epoch >= 0 && log.early_stop_epoch < 100;
    check.prediction_variance = mean_bucket_variance(preds);
    check.target_variance = mean_bucket_variance(test_targets);
    check.collapsed = check.early_stopped_before_100 &&
                      check.prediction_variance < 0.5 * check.target_variance;
    return check;
}

} // namespace wordlecast::neural
