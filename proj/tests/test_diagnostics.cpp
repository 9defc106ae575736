#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "support/fixtures.hpp"
#include "wordlecast/timeseries.hpp"

using namespace wordlecast;
namespace ts = wordlecast::timeseries;

TEST_CASE("acf of 1..8 at lag 1 is 0.625", "[diagnostics]") {
    // hand oracle: mean 4.5, denominator 42, lag-1 numerator 26.25
    const std::vector<double> x{1, 2, 3, 4, 5, 6, 7, 8};
    const auto r = ts::acf(x, 3);
    REQUIRE(r.size() == 4);
    CHECK(r[0] == 1.0);
    CHECK(r[1] == Catch::Approx(0.625).margin(1e-12));
}

TEST_CASE("acf lag 0 is exactly 1 for any series", "[diagnostics]") {
    for (auto seed : {1ULL, 2ULL, 3ULL}) {
        const auto s = fixtures::white_noise(50, seed);
        CHECK(ts::acf(s, 10)[0] == 1.0);
    }
}

TEST_CASE("acf and pacf are affine invariant", "[diagnostics]") {
    const auto s = fixtures::white_noise(200, 42);
    std::vector<double> scaled(s.values.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = -3.7 * s.values[i] + 11.0;

    const auto r0 = ts::acf(s.values, 15);
    const auto r1 = ts::acf(scaled, 15);
    const auto p0 = ts::pacf(s.values, 15);
    const auto p1 = ts::pacf(scaled, 15);
    for (std::size_t k = 0; k < r0.size(); ++k) {
        CHECK(r1[k] == Catch::Approx(r0[k]).margin(1e-9));
        CHECK(p1[k] == Catch::Approx(p0[k]).margin(1e-9));
    }
}

TEST_CASE("pacf lag 1 equals acf lag 1 exactly", "[diagnostics]") {
    for (auto seed : {7ULL, 8ULL, 9ULL}) {
        const auto s = fixtures::simulate_arma({0.4}, {}, 5.0, 1.0, 300, seed);
        const auto r = ts::acf(s, 10);
        const auto p = ts::pacf(s, 10);
        CHECK(p[1] == r[1]);
    }
}

TEST_CASE("pacf magnitudes stay within 1", "[diagnostics]") {
    const auto s = fixtures::simulate_arma({0.7, -0.2}, {0.3}, 0.0, 1.0, 400, 11);
    for (double v : ts::pacf(s, 20)) CHECK(std::fabs(v) <= 1.0 + 1e-12);
}

TEST_CASE("white-noise correlogram stays inside the band", "[diagnostics]") {
    const auto s = fixtures::white_noise(400, 2023);
    const double band = ts::confidence_band(400);
    CHECK(band == Catch::Approx(1.96 / 20.0));

    const auto r = ts::acf(s, 20);
    const auto p = ts::pacf(s, 20);
    int acf_outside = 0, pacf_outside = 0;
    for (int k = 1; k <= 20; ++k) {
        if (std::fabs(r[static_cast<std::size_t>(k)]) > band) ++acf_outside;
        if (std::fabs(p[static_cast<std::size_t>(k)]) > band) ++pacf_outside;
    }
    CHECK(acf_outside <= 2);
    CHECK(pacf_outside <= 2);
}

TEST_CASE("AR(1) pacf spikes at lag 1 and cuts off", "[diagnostics]") {
    const auto s = fixtures::simulate_arma({0.5}, {}, 0.0, 1.0, 2000, 9);
    const auto p = ts::pacf(s, 20);
    CHECK(p[1] > 0.45);
    CHECK(p[1] < 0.55);
    const double band = ts::confidence_band(2000);
    for (int k = 2; k <= 20; ++k) {
        CHECK(std::fabs(p[static_cast<std::size_t>(k)]) <= band);
    }
}

TEST_CASE("constant series has no correlogram", "[diagnostics]") {
    const std::vector<double> flat(50, 3.25);
    CHECK_THROWS_AS(ts::acf(flat, 5), ComputeError);
    CHECK_THROWS_AS(ts::pacf(flat, 5), ComputeError);
}

TEST_CASE("correlogram lag bounds are enforced", "[diagnostics]") {
    const std::vector<double> x{1, 2, 1, 3, 1, 4, 1, 5};
    // acf allows any lag below the length; lag 0 alone is legal
    CHECK(ts::acf(x, 0) == std::vector<double>{1.0});
    CHECK_NOTHROW(ts::acf(x, 7));
    CHECK_THROWS_AS(ts::acf(x, 8), std::invalid_argument);
    CHECK_THROWS_AS(ts::acf(x, -1), std::invalid_argument);
    // pacf needs max_lag below half the length and at least 1
    CHECK_NOTHROW(ts::pacf(x, 3));
    CHECK_THROWS_AS(ts::pacf(x, 0), std::invalid_argument);
    CHECK_THROWS_AS(ts::pacf(x, 4), std::invalid_argument);
}

TEST_CASE("band narrows with sample size", "[diagnostics]") {
    CHECK(ts::confidence_band(100) == Catch::Approx(0.196));
    CHECK(ts::confidence_band(400) < ts::confidence_band(100));
    CHECK(ts::confidence_band(100, 2.58) > ts::confidence_band(100));
    CHECK_THROWS_AS(ts::confidence_band(0), std::invalid_argument);
}

TEST_CASE("adf keeps the unit root on a random walk", "[diagnostics]") {
    const auto s = fixtures::random_walk(500, 31);
    const auto res = ts::adf_test(s, 12);
    CHECK_FALSE(res.reject);
    CHECK(res.statistic > res.crit_5);
}

TEST_CASE("adf rejects on stationary AR(1)", "[diagnostics]") {
    const auto s = fixtures::simulate_arma({0.3}, {}, 0.0, 1.0, 500, 17);
    const auto res = ts::adf_test(s, 12);
    CHECK(res.reject);
    CHECK(res.statistic < res.crit_5);
}

TEST_CASE("adf critical values are ordered and sized plausibly", "[diagnostics]") {
    const auto s = fixtures::simulate_arma({0.3}, {}, 0.0, 1.0, 500, 17);
    const auto res = ts::adf_test(s, 12);
    CHECK(res.crit_1 < res.crit_5);
    CHECK(res.crit_5 < res.crit_10);
    // constant-only Dickey-Fuller table, large sample
    CHECK(res.crit_5 == Catch::Approx(-2.87).margin(0.015));
    CHECK(res.effective_n > 400);
    CHECK(res.used_lag >= 0);
    CHECK(res.used_lag <= 12);
}

TEST_CASE("adf rejects constant and tiny input", "[diagnostics]") {
    CHECK_THROWS_AS(ts::adf_test(std::vector<double>(40, 1.0), 4), ComputeError);
    CHECK_THROWS_AS(ts::adf_test(std::vector<double>{1, 2, 3}, 1), std::invalid_argument);
}

TEST_CASE("band entry rule picks the last out-of-band lag", "[diagnostics]") {
    // values indexed by lag; [0] is ignored by convention
    const double band = 0.1;
    CHECK(ts::detail::last_lag_before_band_entry({1.0, 0.9, 0.8, 0.05, 0.04, 0.9}, band) == 2);
    // an isolated dip does not count as entry: the run must hold for two lags
    CHECK(ts::detail::last_lag_before_band_entry({1.0, 0.9, 0.05, 0.8, 0.04, 0.03}, band) == 3);
    // never settles: fall back to the last lag
    CHECK(ts::detail::last_lag_before_band_entry({1.0, 0.9, 0.8, 0.7}, band) == 3);
    // settles immediately
    CHECK(ts::detail::last_lag_before_band_entry({1.0, 0.01, 0.02, 0.03}, band) == 0);
    // final lag alone can close the run
    CHECK(ts::detail::last_lag_before_band_entry({1.0, 0.9, 0.05}, band) == 1);
}

TEST_CASE("diagnostics on white noise suggests a flat order", "[diagnostics]") {
    const auto s = fixtures::white_noise(400, 99, 10.0, 2.0);
    const auto rep = ts::diagnostics(s);
    CHECK(rep.acf[0] == 1.0);
    CHECK(rep.acf.size() == 21);
    CHECK(rep.pacf.size() == 20);
    CHECK(rep.adf_reject_unit_root);
    CHECK(rep.suggested_d == 0);
    CHECK(rep.suggested_p <= 2);
    CHECK(rep.suggested_q <= 2);
    CHECK(rep.band_halfwidth == Catch::Approx(1.96 / 20.0));
}

TEST_CASE("diagnostics on a random walk suggests differencing", "[diagnostics]") {
    const auto s = fixtures::random_walk(400, 12);
    const auto rep = ts::diagnostics(s);
    CHECK_FALSE(rep.adf_reject_unit_root);
    CHECK(rep.suggested_d >= 1);
}

TEST_CASE("suggested q is capped at 2 even for slow acf decay", "[diagnostics]") {
    const auto s = fixtures::simulate_arma({0.95}, {}, 0.0, 1.0, 500, 3);
    const auto rep = ts::diagnostics(s);
    CHECK(rep.suggested_q == 2);
    CHECK(rep.suggested_p >= 1);
}

TEST_CASE("diagnostics rejects too-short series", "[diagnostics]") {
    CHECK_THROWS_AS(ts::diagnostics(fixtures::make_series({1.0, 2.0, 3.0})),
                    std::invalid_argument);
}

TEST_CASE("error metrics match a hand computation", "[diagnostics]") {
    const auto m = ts::error_metrics({110.0, 90.0, 50.0}, {100.0, 100.0, 0.0});
    CHECK(m.mean_relative_error == Catch::Approx(0.1));
    CHECK(m.mae == Catch::Approx((10.0 + 10.0 + 50.0) / 3.0));
    CHECK(m.excluded_points == 1);

    CHECK_THROWS_AS(ts::error_metrics({1.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ts::error_metrics({}, {}), std::invalid_argument);
}
