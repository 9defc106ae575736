#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "wordlecast/error.hpp"

namespace wordlecast {

struct NelderMeadOptions {
    double f_tolerance = 1e-10;   // relative spread of simplex values
    double x_tolerance = 1e-8;    // max vertex distance from best
    std::size_t max_evaluations = 200000;
    int restarts = 3;             // re-seed the simplex around the best point
    double initial_step = 0.25;   // per-coordinate simplex edge
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    std::vector<double> best_trace; // best objective after each accepted step
};

namespace detail {

inline NelderMeadResult nelder_mead_once(const std::function<double(const std::vector<double>&)>& f,
                                         std::vector<double> x0, const NelderMeadOptions& opt,
                                         std::vector<double>* trace) {
    const std::size_t n = x0.size();
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) {
        double step = opt.initial_step * std::max(1.0, std::fabs(x0[i]));
        pts[i + 1][i] += step;
    }

    std::vector<double> fv(n + 1);
    std::size_t evals = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = f(pts[i]);
        ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&]() {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    NelderMeadResult res;
    sort_simplex();
    if (trace) trace->push_back(fv[order[0]]);

    while (evals < opt.max_evaluations) {
        sort_simplex();
        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        const double f_spread = std::fabs(fv[worst] - fv[best]);
        double x_spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                x_spread = std::max(x_spread, std::fabs(pts[order[i]][j] - pts[best][j]));
            }
        }
        if (f_spread <= opt.f_tolerance * (1.0 + std::fabs(fv[best])) ||
            x_spread <= opt.x_tolerance) {
            res.converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - pts[worst][j]);
            return p;
        };

        auto accept = [&](std::vector<double> p, double fp) {
            pts[worst] = std::move(p);
            fv[worst] = fp;
            if (trace) trace->push_back(std::min(fp, fv[best]));
        };

        std::vector<double> xr = blend(alpha);
        const double fr = f(xr);
        ++evals;

        if (fr < fv[best]) {
            std::vector<double> xe = blend(gamma);
            const double fe = f(xe);
            ++evals;
            if (fe < fr) accept(std::move(xe), fe);
            else accept(std::move(xr), fr);
        } else if (fr < fv[second_worst]) {
            accept(std::move(xr), fr);
        } else {
            std::vector<double> xc = blend(fr < fv[worst] ? rho : -rho);
            const double fc = f(xc);
            ++evals;
            if (fc < std::min(fr, fv[worst])) {
                accept(std::move(xc), fc);
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j) {
                        pts[i][j] = pts[best][j] + sigma * (pts[i][j] - pts[best][j]);
                    }
                    fv[i] = f(pts[i]);
                    ++evals;
                }
                if (trace) trace->push_back(*std::min_element(fv.begin(), fv.end()));
            }
        }
    }

    sort_simplex();
    res.x = pts[order[0]];
    res.fx = fv[order[0]];
    res.evaluations = evals;
    return res;
}

} // namespace detail

/// Derivative-free simplex minimization.  Fully deterministic: the
/// initial simplex is built from fixed per-coordinate steps and each
/// restart re-seeds around the incumbent with a smaller edge.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0,
                                    const NelderMeadOptions& opt = {}) {
    NelderMeadResult best;
    bool any_converged = false;
    std::size_t total_evals = 0;
    std::vector<double> trace;
    NelderMeadOptions stage = opt;
    std::vector<double> x = std::move(x0);
    for (int r = 0; r <= opt.restarts; ++r) {
        NelderMeadResult res = detail::nelder_mead_once(f, x, stage, &trace);
        total_evals += res.evaluations;
        any_converged = any_converged || res.converged;
        const bool improved =
            r == 0 || best.fx - res.fx > 1e-15 * (1.0 + std::fabs(best.fx));
        if (r == 0 || res.fx < best.fx) best = std::move(res);
        if (!improved) break;
        x = best.x;
        // polish stages: smaller simplex, tighter stopping rules
        stage.initial_step *= 0.25;
        stage.f_tolerance *= 1e-2;
        stage.x_tolerance *= 1e-2;
    }
    best.evaluations = total_evals;
    best.converged = any_converged;
    best.best_trace = std::move(trace);
    return best;
}

} // namespace wordlecast
