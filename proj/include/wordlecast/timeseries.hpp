#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "wordlecast/calendar.hpp"
#include "wordlecast/error.hpp"
#include "wordlecast/optim.hpp"

namespace wordlecast::timeseries {

/// A daily real-valued series.  The weekday/weekend flag of element t
/// follows from the shared day-index calendar (day start_day_index + t).
struct Series {
    std::vector<double> values;
    long start_day_index = 1;

    std::size_t size() const { return values.size(); }
    long day_index_at(std::size_t i) const { return start_day_index + static_cast<long>(i); }
    long end_day_index() const { return start_day_index + static_cast<long>(values.size()) - 1; }
};

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;

    void validate() const {
        if (p < 0 || d < 0 || q < 0) throw std::invalid_argument("ARIMA order must be non-negative");
        if (p + q < 1) throw std::invalid_argument("ARIMA order needs p + q >= 1");
        if (d > 2) throw std::invalid_argument("ARIMA order supports d <= 2");
    }
};

struct ErrorMetrics {
    double mean_relative_error = 0.0;
    double mae = 0.0;
    int excluded_points = 0; // points with non-positive actuals, skipped in the relative mean
};

struct ArimaxModel {
    ArimaOrder order;
    std::vector<double> ar_coeffs;
    std::vector<double> ma_coeffs;
    double intercept = 0.0; // process mean of the adjusted, differenced series
    double weekend_factor = 0.0;
    double residual_variance = 0.0;
    long train_start_day = 0;
    long train_end_day = 0;
    bool unstable_ar = false;
    double css = 0.0;
    std::vector<double> css_trace; // best objective per accepted optimizer step
};

struct DiagnosticsReport {
    std::vector<double> acf;  // lags 0..L
    std::vector<double> pacf; // lags 1..L
    double band_halfwidth = 0.0;
    double adf_statistic = 0.0;
    bool adf_reject_unit_root = false;
    int suggested_p = 0;
    int suggested_d = 0;
    int suggested_q = 0;
    bool whiteness_ok = false;
};

struct AdfResult {
    double statistic = 0.0;
    bool reject = false;
    int used_lag = 0;
    int effective_n = 0;
    double crit_1 = 0.0;
    double crit_5 = 0.0;
    double crit_10 = 0.0;
};

// ---------------------------------------------------------------------------
// correlograms
// ---------------------------------------------------------------------------

/// Sample autocorrelation r_k = sum (x_t - m)(x_{t+k} - m) / sum (x_t - m)^2
/// for k = 0..max_lag.
inline std::vector<double> acf(const std::vector<double>& x, int max_lag) {
    const std::size_t n = x.size();
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
        throw std::invalid_argument("acf: max_lag must be in [0, n)");
    }
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    double denom = 0.0;
    for (double v : x) denom += (v - mean) * (v - mean);
    if (denom <= 0.0) throw ComputeError("acf: constant series has zero variance");

    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
    r[0] = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + static_cast<std::size_t>(k) < n; ++t) {
            num += (x[t] - mean) * (x[t + static_cast<std::size_t>(k)] - mean);
        }
        r[static_cast<std::size_t>(k)] = num / denom;
    }
    return r;
}

inline std::vector<double> acf(const Series& s, int max_lag) { return acf(s.values, max_lag); }

namespace detail {

/// Durbin-Levinson recursion on an autocorrelation sequence.  Returns the
/// partial autocorrelations (diag) and the final AR(order) coefficient row,
/// which doubles as the Yule-Walker estimate.
struct DurbinLevinson {
    std::vector<double> pacf;      // [0]=1, [k] = phi_kk
    std::vector<double> final_row; // phi_{order,1..order}
};

inline DurbinLevinson durbin_levinson(const std::vector<double>& r, int order) {
    DurbinLevinson out;
    out.pacf.assign(static_cast<std::size_t>(order) + 1, 0.0);
    out.pacf[0] = 1.0;
    if (order == 0) return out;

    std::vector<double> prev(static_cast<std::size_t>(order) + 1, 0.0);
    std::vector<double> cur(static_cast<std::size_t>(order) + 1, 0.0);
    prev[1] = r[1];
    out.pacf[1] = r[1];
    for (int k = 2; k <= order; ++k) {
        double num = r[static_cast<std::size_t>(k)];
        double den = 1.0;
        for (int j = 1; j < k; ++j) {
            num -= prev[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
            den -= prev[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(j)];
        }
        const double a = (std::fabs(den) > 1e-14) ? num / den : 0.0;
        out.pacf[static_cast<std::size_t>(k)] = a;
        for (int j = 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j)] -
                                               a * prev[static_cast<std::size_t>(k - j)];
        }
        cur[static_cast<std::size_t>(k)] = a;
        std::swap(prev, cur);
    }
    out.final_row.assign(prev.begin() + 1, prev.begin() + order + 1);
    return out;
}

} // namespace detail

/// Partial autocorrelations for lags 0..max_lag ([0] is 1 by convention).
inline std::vector<double> pacf(const std::vector<double>& x, int max_lag) {
    if (max_lag < 1 || static_cast<std::size_t>(max_lag) >= x.size() / 2) {
        throw std::invalid_argument("pacf: max_lag must be in [1, n/2)");
    }
    const auto r = acf(x, max_lag);
    return detail::durbin_levinson(r, max_lag).pacf;
}

inline std::vector<double> pacf(const Series& s, int max_lag) { return pacf(s.values, max_lag); }

/// Correlogram band half-width z/sqrt(n) under the white-noise null.
inline double confidence_band(int n, double z = 1.96) {
    if (n < 2) throw std::invalid_argument("confidence_band: need n >= 2");
    return z / std::sqrt(static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// augmented Dickey-Fuller test
// ---------------------------------------------------------------------------

namespace detail {

struct OlsFit {
    Eigen::VectorXd beta;
    double ssr = 0.0;
    Eigen::MatrixXd xtx_inv;
};

inline OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols()) throw ComputeError("singular regression matrix");
    OlsFit fit;
    fit.beta = qr.solve(y);
    const Eigen::VectorXd resid = y - X * fit.beta;
    fit.ssr = resid.squaredNorm();
    fit.xtx_inv = (X.transpose() * X).inverse();
    return fit;
}

/// Dickey-Fuller tau critical values, constant-no-trend case, linearly
/// interpolated in the effective sample size.
inline double adf_critical(int n, int level_index) {
    static constexpr double sizes[] = {25.0, 50.0, 100.0, 250.0, 500.0, 1e9};
    static constexpr double table[3][6] = {
        {-3.75, -3.58, -3.51, -3.46, -3.44, -3.43}, // 1%
        {-3.00, -2.93, -2.89, -2.88, -2.87, -2.86}, // 5%
        {-2.63, -2.60, -2.58, -2.57, -2.57, -2.57}, // 10%
    };
    const double nn = static_cast<double>(n);
    if (nn <= sizes[0]) return table[level_index][0];
    for (int i = 1; i < 6; ++i) {
        if (nn <= sizes[i]) {
            const double w = (nn - sizes[i - 1]) / (sizes[i] - sizes[i - 1]);
            return table[level_index][i - 1] +
                   w * (table[level_index][i] - table[level_index][i - 1]);
        }
    }
    return table[level_index][5];
}

/// Build the ADF regression for augmentation order k over rows
/// t = t_first..n-2 of the difference series and fit it.
/// Columns: intercept, x_{t-1} (the unit-root term), then k lagged diffs.
inline OlsFit adf_regression(const std::vector<double>& x, int k, int t_first, int* rows_out) {
    const int n = static_cast<int>(x.size());
    const int rows = (n - 1) - t_first;
    if (rows < k + 3) throw ComputeError("adf: not enough observations for regression");
    Eigen::MatrixXd X(rows, 2 + k);
    Eigen::VectorXd y(rows);
    for (int r = 0; r < rows; ++r) {
        const int t = t_first + r; // dx index: dx[t] = x[t+1] - x[t]
        y(r) = x[static_cast<std::size_t>(t + 1)] - x[static_cast<std::size_t>(t)];
        X(r, 0) = 1.0;
        X(r, 1) = x[static_cast<std::size_t>(t)];
        for (int j = 1; j <= k; ++j) {
            X(r, 1 + j) = x[static_cast<std::size_t>(t - j + 1)] - x[static_cast<std::size_t>(t - j)];
        }
    }
    OlsFit fit = ols(X, y);
    if (rows_out) *rows_out = rows;
    return fit;
}

} // namespace detail

/// Augmented Dickey-Fuller regression with constant.  Augmentation lags
/// are chosen by AIC over a common sample, then the chosen order is
/// refit on the maximal sample.  Rejection compares against the 5%
/// critical value.
inline AdfResult adf_test(const std::vector<double>& x, int max_aug_lag) {
    const int n = static_cast<int>(x.size());
    if (n < 20) throw std::invalid_argument("adf_test: series too short (need >= 20)");
    int maxlag = std::max(0, max_aug_lag);
    maxlag = std::min(maxlag, (n - 10) / 2);

    int best_k = 0;
    double best_aic = 0.0;
    for (int k = 0; k <= maxlag; ++k) {
        int rows = 0;
        const auto fit = detail::adf_regression(x, k, maxlag, &rows);
        const double sig2 = fit.ssr / static_cast<double>(rows);
        const double aic = static_cast<double>(rows) * std::log(std::max(sig2, 1e-300)) +
                           2.0 * static_cast<double>(k + 2);
        if (k == 0 || aic < best_aic) {
            best_aic = aic;
            best_k = k;
        }
    }

    int rows = 0;
    const auto fit = detail::adf_regression(x, best_k, best_k, &rows);
    const int nparams = 2 + best_k;
    const double s2 = fit.ssr / static_cast<double>(rows - nparams);
    const double se = std::sqrt(s2 * fit.xtx_inv(1, 1));
    if (!(se > 0.0)) throw ComputeError("adf: degenerate regression");

    AdfResult res;
    res.statistic = fit.beta(1) / se;
    res.used_lag = best_k;
    res.effective_n = rows;
    res.crit_1 = detail::adf_critical(rows, 0);
    res.crit_5 = detail::adf_critical(rows, 1);
    res.crit_10 = detail::adf_critical(rows, 2);
    res.reject = res.statistic < res.crit_5;
    return res;
}

inline AdfResult adf_test(const Series& s, int max_aug_lag) { return adf_test(s.values, max_aug_lag); }

// ---------------------------------------------------------------------------
// error metrics
// ---------------------------------------------------------------------------

/// mean_relative_error = mean |pred - actual| / actual (positive actuals
/// only; others excluded and counted), mae = mean |pred - actual|.
inline ErrorMetrics error_metrics(const std::vector<double>& predicted,
                                  const std::vector<double>& actual) {
    if (predicted.size() != actual.size() || predicted.empty()) {
        throw std::invalid_argument("error_metrics: inputs must be equal-length and non-empty");
    }
    ErrorMetrics m;
    double rel_sum = 0.0;
    std::size_t rel_n = 0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double err = std::fabs(predicted[i] - actual[i]);
        abs_sum += err;
        if (actual[i] > 0.0) {
            rel_sum += err / actual[i];
            ++rel_n;
        } else {
            ++m.excluded_points;
        }
    }
    if (rel_n == 0) {
        throw std::invalid_argument("error_metrics: no positive actual values; relative error undefined");
    }
    m.mean_relative_error = rel_sum / static_cast<double>(rel_n);
    m.mae = abs_sum / static_cast<double>(actual.size());
    return m;
}

// ---------------------------------------------------------------------------
// exponential-decay baseline
// ---------------------------------------------------------------------------

struct ExpDecayFit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    ErrorMetrics in_sample;
};

inline double exp_decay_value(const ExpDecayFit& fit, double t) {
    return fit.a * std::exp(-fit.b * t) + fit.c;
}

/// Least-squares fit of x_t = a exp(-b t) + c, t = 0..n-1.  The decay
/// rate is profiled over a fixed log grid with (a, c) solved linearly,
/// then all three parameters are polished with the simplex optimizer
/// (b parameterized as beta^2 to keep it non-negative).
inline ExpDecayFit fit_exponential_decay(const Series& series) {
    const auto& x = series.values;
    const std::size_t n = x.size();
    if (n < 4) throw std::invalid_argument("fit_exponential_decay: need at least 4 points");

    double m = 0.0;
    for (double v : x) m += v;
    m /= static_cast<double>(n);
    double sd = 0.0;
    for (double v : x) sd += (v - m) * (v - m);
    sd = std::sqrt(sd / static_cast<double>(n));
    if (!(sd > 0.0)) sd = 1.0;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = (x[i] - m) / sd;

    auto profile = [&](double b, double* a_out, double* c_out) {
        // OLS of xs on [exp(-b t), 1]
        double s_ee = 0.0, s_e1 = 0.0, s_11 = static_cast<double>(n);
        double s_ey = 0.0, s_1y = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double e = std::exp(-b * static_cast<double>(t));
            s_ee += e * e;
            s_e1 += e;
            s_ey += e * xs[t];
            s_1y += xs[t];
        }
        const double det = s_ee * s_11 - s_e1 * s_e1;
        double a = 0.0, c = 0.0;
        if (std::fabs(det) > 1e-12) {
            a = (s_ey * s_11 - s_e1 * s_1y) / det;
            c = (s_ee * s_1y - s_e1 * s_ey) / det;
        } else {
            c = s_1y / s_11;
        }
        double sse = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double r = xs[t] - (a * std::exp(-b * static_cast<double>(t)) + c);
            sse += r * r;
        }
        if (a_out) *a_out = a;
        if (c_out) *c_out = c;
        return sse;
    };

    double best_b = 0.0, best_a = 0.0, best_c = 0.0;
    double best_sse = profile(0.0, &best_a, &best_c);
    for (int g = 0; g <= 40; ++g) {
        const double b = std::pow(10.0, -5.0 + 5.0 * static_cast<double>(g) / 40.0);
        double a = 0.0, c = 0.0;
        const double sse = profile(b, &a, &c);
        if (sse < best_sse) {
            best_sse = sse;
            best_b = b;
            best_a = a;
            best_c = c;
        }
    }

    auto objective = [&](const std::vector<double>& params) {
        const double a = params[0];
        const double b = params[1] * params[1];
        const double c = params[2];
        double sse = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const double r = xs[t] - (a * std::exp(-b * static_cast<double>(t)) + c);
            sse += r * r;
        }
        return sse;
    };
    NelderMeadOptions opt;
    opt.initial_step = 0.1;
    const auto nm = nelder_mead(objective, {best_a, std::sqrt(best_b), best_c}, opt);
    if (!nm.converged) throw ComputeError("fit_exponential_decay: optimizer did not converge");

    ExpDecayFit fit;
    fit.a = nm.x[0] * sd;
    fit.b = nm.x[1] * nm.x[1];
    fit.c = m + nm.x[2] * sd;
    std::vector<double> fitted(n);
    for (std::size_t t = 0; t < n; ++t) fitted[t] = exp_decay_value(fit, static_cast<double>(t));
    fit.in_sample = error_metrics(fitted, x);
    return fit;
}

// ---------------------------------------------------------------------------
// ARIMAX estimation
// ---------------------------------------------------------------------------

namespace detail {

/// Multiplicative weekday/weekend modifier: weekdays keep their value,
/// weekends are scaled by (1 - factor).  Factor 0 is the identity.
inline std::vector<double> weekend_adjust(const Series& series, double factor) {
    std::vector<double> out = series.values;
    if (factor == 0.0) return out;
    for (std::size_t t = 0; t < out.size(); ++t) {
        if (is_weekend(series.day_index_at(t))) out[t] *= (1.0 - factor);
    }
    return out;
}

inline double weekend_weight(long day_index, double factor) {
    return is_weekend(day_index) ? 1.0 - factor : 1.0;
}

inline std::vector<double> difference(const std::vector<double>& x, int d) {
    std::vector<double> z = x;
    for (int k = 0; k < d; ++k) {
        if (z.size() < 2) throw std::invalid_argument("difference: series too short");
        std::vector<double> next(z.size() - 1);
        for (std::size_t i = 0; i + 1 < z.size(); ++i) next[i] = z[i + 1] - z[i];
        z = std::move(next);
    }
    return z;
}

/// One-step-ahead residuals of the mean-form ARMA recursion.
/// Residuals before index p stay zero (conditional sum of squares).
inline std::vector<double> arma_residuals(const std::vector<double>& z,
                                          const std::vector<double>& phi,
                                          const std::vector<double>& theta, double mu) {
    const std::size_t n = z.size();
    const std::size_t p = phi.size();
    const std::size_t q = theta.size();
    std::vector<double> eps(n, 0.0);
    for (std::size_t t = p; t < n; ++t) {
        double e = z[t] - mu;
        for (std::size_t i = 0; i < p; ++i) e -= phi[i] * (z[t - 1 - i] - mu);
        for (std::size_t j = 0; j < q && t >= j + 1; ++j) e -= theta[j] * eps[t - 1 - j];
        eps[t] = e;
    }
    return eps;
}

inline double css_objective(const std::vector<double>& z, const std::vector<double>& phi,
                            const std::vector<double>& theta, double mu) {
    const auto eps = arma_residuals(z, phi, theta, mu);
    double css = 0.0;
    for (std::size_t t = phi.size(); t < eps.size(); ++t) css += eps[t] * eps[t];
    return css;
}

/// All characteristic roots of the AR polynomial must lie strictly
/// inside the unit disk of the companion form (equivalently the lag
/// polynomial's roots outside the unit circle).
inline bool ar_is_stable(const std::vector<double>& phi) {
    const int p = static_cast<int>(phi.size());
    if (p == 0) return true;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (int i = 0; i < p; ++i) companion(0, i) = phi[static_cast<std::size_t>(i)];
    for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    const Eigen::VectorXcd eig = companion.eigenvalues();
    for (int i = 0; i < p; ++i) {
        if (std::abs(eig(i)) >= 1.0 - 1e-10) return false;
    }
    return true;
}

} // namespace detail

/// Estimate an ARIMAX(p,d,q) model on a series: weekend-adjust, apply d
/// differences, then minimize the conditional sum of squares with the
/// simplex optimizer.  Initialization is deterministic: Yule-Walker AR
/// coefficients, zero MA coefficients, mean intercept.  An unstable AR
/// polynomial sets a warning flag rather than failing.
inline ArimaxModel fit_arimax(const Series& series, const ArimaOrder& order, double weekend_factor) {
    order.validate();
    if (weekend_factor < 0.0 || weekend_factor > 0.5) {
        throw std::invalid_argument("weekend_factor must lie in [0, 0.5]");
    }
    const std::size_t n0 = series.size();
    if (static_cast<long>(n0) <= 10L * (order.p + order.q)) {
        throw std::invalid_argument("fit_arimax: series length must exceed 10*(p+q)");
    }

    const auto adjusted = detail::weekend_adjust(series, weekend_factor);
    const auto z = detail::difference(adjusted, order.d);
    const std::size_t n = z.size();
    const std::size_t p = static_cast<std::size_t>(order.p);
    const std::size_t q = static_cast<std::size_t>(order.q);

    double m = 0.0;
    for (double v : z) m += v;
    m /= static_cast<double>(n);
    double sd = 0.0;
    for (double v : z) sd += (v - m) * (v - m);
    sd = std::sqrt(sd / static_cast<double>(n));
    const bool degenerate = !(sd > 0.0);
    if (degenerate) sd = 1.0;

    std::vector<double> zs(n);
    for (std::size_t i = 0; i < n; ++i) zs[i] = (z[i] - m) / sd;

    // deterministic start: Yule-Walker AR row, zero MA, zero centered mean
    std::vector<double> x0(p + q + 1, 0.0);
    if (p > 0 && !degenerate) {
        const auto r = acf(z, static_cast<int>(p));
        const auto dl = detail::durbin_levinson(r, static_cast<int>(p));
        for (std::size_t i = 0; i < p; ++i) x0[i] = dl.final_row[i];
    }

    auto unpack = [&](const std::vector<double>& params, std::vector<double>& phi,
                      std::vector<double>& theta, double& mu) {
        phi.assign(params.begin(), params.begin() + static_cast<long>(p));
        theta.assign(params.begin() + static_cast<long>(p),
                     params.begin() + static_cast<long>(p + q));
        mu = params[p + q];
    };

    std::vector<double> phi_buf, theta_buf;
    auto objective = [&](const std::vector<double>& params) {
        double mu = 0.0;
        unpack(params, phi_buf, theta_buf, mu);
        return detail::css_objective(zs, phi_buf, theta_buf, mu);
    };

    NelderMeadOptions opt;
    opt.initial_step = 0.1;
    opt.max_evaluations = 60000 + 20000 * static_cast<std::size_t>(p + q + 1);
    const auto nm = nelder_mead(objective, x0, opt);
    if (!nm.converged) {
        throw ComputeError("fit_arimax: CSS optimization did not converge within the evaluation cap");
    }

    ArimaxModel model;
    model.order = order;
    unpack(nm.x, model.ar_coeffs, model.ma_coeffs, model.intercept);
    model.intercept = m + sd * model.intercept;
    model.weekend_factor = weekend_factor;
    model.css = nm.fx * sd * sd;
    const long dof = static_cast<long>(n) - order.p - order.q - 1;
    model.residual_variance = model.css / static_cast<double>(std::max(1L, dof));
    model.train_start_day = series.start_day_index;
    model.train_end_day = series.end_day_index();
    model.unstable_ar = !detail::ar_is_stable(model.ar_coeffs);
    model.css_trace.reserve(nm.best_trace.size());
    for (double v : nm.best_trace) model.css_trace.push_back(v * sd * sd);
    return model;
}

/// Iterated one-step-ahead forecast.  History is re-adjusted with the
/// model's weekend factor, forecast on the differenced scale, integrated
/// back, then divided by the target day's weekend weight.  Negative
/// results clamp to zero (sets *clamped when provided).
inline std::vector<double> forecast(const ArimaxModel& model, const Series& series, int horizon,
                                    bool* clamped = nullptr) {
    if (horizon < 1) throw std::invalid_argument("forecast: horizon must be >= 1");
    if (clamped) *clamped = false;
    const auto adjusted = detail::weekend_adjust(series, model.weekend_factor);
    const auto z = detail::difference(adjusted, model.order.d);
    const std::size_t n = z.size();
    const std::size_t p = model.ar_coeffs.size();
    const std::size_t q = model.ma_coeffs.size();
    const double mu = model.intercept;
    const auto eps = detail::arma_residuals(z, model.ar_coeffs, model.ma_coeffs, mu);

    // tails[k] = most recent value of the k-times-differenced adjusted series
    std::vector<double> tails(static_cast<std::size_t>(model.order.d));
    {
        std::vector<double> level = adjusted;
        for (int k = 0; k < model.order.d; ++k) {
            tails[static_cast<std::size_t>(k)] = level.back();
            level = detail::difference(level, 1);
        }
    }

    std::vector<double> zfut(static_cast<std::size_t>(horizon), 0.0);
    auto zval = [&](long t) {
        return t < static_cast<long>(n) ? z[static_cast<std::size_t>(t)]
                                        : zfut[static_cast<std::size_t>(t) - n];
    };
    auto epsval = [&](long t) {
        return (t >= 0 && t < static_cast<long>(n)) ? eps[static_cast<std::size_t>(t)] : 0.0;
    };

    std::vector<double> out(static_cast<std::size_t>(horizon), 0.0);
    for (int h = 0; h < horizon; ++h) {
        const long t = static_cast<long>(n) + h;
        double v = mu;
        for (std::size_t i = 0; i < p; ++i) v += model.ar_coeffs[i] * (zval(t - 1 - static_cast<long>(i)) - mu);
        for (std::size_t j = 0; j < q; ++j) v += model.ma_coeffs[j] * epsval(t - 1 - static_cast<long>(j));
        zfut[static_cast<std::size_t>(h)] = v;

        double level = v;
        for (int k = model.order.d - 1; k >= 0; --k) {
            level += tails[static_cast<std::size_t>(k)];
            tails[static_cast<std::size_t>(k)] = level;
        }

        const long day = series.end_day_index() + h + 1;
        double value = level / detail::weekend_weight(day, model.weekend_factor);
        if (value < 0.0) {
            value = 0.0;
            if (clamped) *clamped = true;
        }
        out[static_cast<std::size_t>(h)] = value;
    }
    return out;
}

/// In-sample residuals of a fitted model on its original scale.
inline std::vector<double> model_residuals(const ArimaxModel& model, const Series& series) {
    const auto adjusted = detail::weekend_adjust(series, model.weekend_factor);
    const auto z = detail::difference(adjusted, model.order.d);
    const auto eps = detail::arma_residuals(z, model.ar_coeffs, model.ma_coeffs, model.intercept);
    return std::vector<double>(eps.begin() + static_cast<long>(model.ar_coeffs.size()), eps.end());
}

// ---------------------------------------------------------------------------
// diagnostics
// ---------------------------------------------------------------------------

namespace detail {

/// Last lag before the correlogram settles inside the band: one less
/// than the first lag that opens a run of in-band values.  Input is
/// indexed by lag with [0] = 1 (ignored).
inline int last_lag_before_band_entry(const std::vector<double>& corr_by_lag, double band) {
    const int max_lag = static_cast<int>(corr_by_lag.size()) - 1;
    for (int k = 1; k <= max_lag; ++k) {
        const bool in_now = std::fabs(corr_by_lag[static_cast<std::size_t>(k)]) <= band;
        const bool in_next = k == max_lag ||
                             std::fabs(corr_by_lag[static_cast<std::size_t>(k + 1)]) <= band;
        if (in_now && in_next) return k - 1;
    }
    return max_lag;
}

} // namespace detail

/// Correlogram + ADF summary used for order selection.
inline DiagnosticsReport diagnostics(const Series& series, int max_lag = 20, int max_aug_lag = 12) {
    const std::size_t n = series.size();
    int lag = std::min<int>(max_lag, static_cast<int>(n) / 2 - 1);
    if (lag < 1) throw std::invalid_argument("diagnostics: series too short");

    DiagnosticsReport rep;
    rep.acf = acf(series.values, lag);
    const auto pk = pacf(series.values, lag);
    rep.pacf.assign(pk.begin() + 1, pk.end());
    rep.band_halfwidth = confidence_band(static_cast<int>(n));
    rep.suggested_p = detail::last_lag_before_band_entry(pk, rep.band_halfwidth);
    rep.suggested_q = std::min(2, detail::last_lag_before_band_entry(rep.acf, rep.band_halfwidth));

    const auto adf0 = adf_test(series.values, max_aug_lag);
    rep.adf_statistic = adf0.statistic;
    rep.adf_reject_unit_root = adf0.reject;
    rep.suggested_d = 0;
    if (!adf0.reject) {
        std::vector<double> work = series.values;
        for (int d = 1; d <= 2; ++d) {
            work = detail::difference(work, 1);
            if (work.size() < 20) break;
            rep.suggested_d = d;
            if (adf_test(work, max_aug_lag).reject) break;
        }
    }
    return rep;
}

/// Correlogram of in-sample residuals with a whiteness verdict: at most
/// 10% of lags 1..20 may sit outside the band.
inline DiagnosticsReport residual_whiteness(const ArimaxModel& model, const Series& series) {
    const auto resid = model_residuals(model, series);
    const int nres = static_cast<int>(resid.size());
    if (nres < 30) throw std::invalid_argument("residual_whiteness: need at least 30 residuals");

    const int lag = std::min(20, nres / 2 - 1);
    DiagnosticsReport rep;
    rep.acf = acf(resid, lag);
    const auto pk = pacf(resid, lag);
    rep.pacf.assign(pk.begin() + 1, pk.end());
    rep.band_halfwidth = confidence_band(nres);
    rep.suggested_p = detail::last_lag_before_band_entry(pk, rep.band_halfwidth);
    rep.suggested_q = std::min(2, detail::last_lag_before_band_entry(rep.acf, rep.band_halfwidth));
    const auto adf0 = adf_test(resid, 12);
    rep.adf_statistic = adf0.statistic;
    rep.adf_reject_unit_root = adf0.reject;
    rep.suggested_d = 0;

    int outside = 0;
    for (int k = 1; k <= lag; ++k) {
        if (std::fabs(rep.acf[static_cast<std::size_t>(k)]) > rep.band_halfwidth) ++outside;
    }
    rep.whiteness_ok = outside <= static_cast<int>(0.10 * lag + 1e-9);
    return rep;
}

} // namespace wordlecast::timeseries
