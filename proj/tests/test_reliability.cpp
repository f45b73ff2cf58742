#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "acdgym/reliability.hpp"

using namespace acd;

namespace {

// Independent sort-and-enumerate oracle used to pin the quantile choice.
double oracle_quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    if (v.size() == 1) return v[0];
    const double pos = q * static_cast<double>(v.size() - 1);
    const double lo = std::floor(pos);
    const std::size_t i = static_cast<std::size_t>(lo);
    if (i + 1 >= v.size()) return v.back();
    return v[i] * (1.0 - (pos - lo)) + v[i + 1] * (pos - lo);
}

double oracle_tail_mean_lower(const std::vector<double>& v, double threshold) {
    double total = 0.0;
    int count = 0;
    for (double x : v) {
        if (x <= threshold) {
            total += x;
            ++count;
        }
    }
    return count == 0 ? *std::min_element(v.begin(), v.end()) : total / count;
}

double oracle_tail_mean_upper(const std::vector<double>& v, double threshold) {
    double total = 0.0;
    int count = 0;
    for (double x : v) {
        if (x >= threshold) {
            total += x;
            ++count;
        }
    }
    return count == 0 ? *std::max_element(v.begin(), v.end()) : total / count;
}

TrainingCurve curve_of(std::vector<double> values) {
    TrainingCurve curve;
    for (std::size_t i = 0; i < values.size(); ++i) {
        curve.steps.push_back(static_cast<std::int64_t>((i + 1) * 100));
    }
    curve.values = std::move(values);
    return curve;
}

}  // namespace

TEST_CASE("iqr spot values") {
    CHECK(iqr({5, 5, 5, 5}) == doctest::Approx(0.0));
    // n=4: Q1 = 1.75, Q3 = 3.25
    CHECK(iqr({1, 2, 3, 4}) == doctest::Approx(1.5));
    CHECK_THROWS_AS(iqr({}), MetricError);
}

TEST_CASE("iqr is translation invariant") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<double> v(1 + rng() % 12);
        for (double& x : v) x = static_cast<double>(rng() % 1000) / 10.0;
        const double c = static_cast<double>(rng() % 100) - 50.0;
        std::vector<double> shifted = v;
        for (double& x : shifted) x += c;
        CHECK(iqr(shifted) == doctest::Approx(iqr(v)).epsilon(1e-12));
    }
}

TEST_CASE("detrend differences the curve") {
    CHECK(detrend({1, 3, 6}) == std::vector<double>{2, 3});
    CHECK(detrend({4, 4, 4, 4}) == std::vector<double>{0, 0, 0});
    const std::vector<double> linear = {2, 5, 8, 11, 14};
    for (double d : detrend(linear)) CHECK(d == doctest::Approx(3.0));
    CHECK_THROWS_AS(detrend({1}), MetricError);
}

TEST_CASE("dt vanishes on constant and linear curves") {
    std::vector<double> linear;
    std::vector<double> constant;
    for (int t = 0; t < 40; ++t) {
        linear.push_back(0.7 * t + 3.0);
        constant.push_back(5.0);
    }
    CHECK(dt(constant, 4) == doctest::Approx(0.0));
    CHECK(dt(linear, 4) == doctest::Approx(0.0));
}

TEST_CASE("dt on the alternating curve") {
    // detrended alternation is [1,-1,1,-1,...]; every window of 4 has IQR 2
    std::vector<double> curve;
    for (int t = 0; t < 20; ++t) curve.push_back(t % 2);
    CHECK(dt(curve, 4) == doctest::Approx(2.0));
}

TEST_CASE("dt window validation") {
    CHECK_THROWS_AS(dt({1, 2, 3}, 5), MetricError);
    CHECK_THROWS_AS(dt({1, 2, 3, 4, 5}, 1), MetricError);
}

TEST_CASE("dt is invariant to adding a linear trend") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<double> curve(30);
        for (double& x : curve) x = static_cast<double>(rng() % 1000) / 100.0;
        const double slope = static_cast<double>(rng() % 20) - 10.0;
        std::vector<double> trended = curve;
        for (std::size_t t = 0; t < trended.size(); ++t) trended[t] += slope * t;
        CHECK(dt(trended, 5) == doctest::Approx(dt(curve, 5)).epsilon(1e-9));
    }
}

TEST_CASE("dr across runs") {
    RunSet identical;
    identical.curves = {curve_of({1, 2, 3}), curve_of({1, 2, 3})};
    auto [per_step, mean] = dr(identical);
    for (double v : per_step) CHECK(v == doctest::Approx(0.0));
    CHECK(mean == doctest::Approx(0.0));

    RunSet offset;
    offset.curves = {curve_of({1, 2, 3}), curve_of({5, 6, 7})};  // constant offset 4
    auto [steps2, mean2] = dr(offset);
    for (double v : steps2) CHECK(v == doctest::Approx(2.0));
    CHECK(mean2 == doctest::Approx(2.0));

    // permutation invariance
    RunSet permuted;
    permuted.curves = {offset.curves[1], offset.curves[0]};
    CHECK(dr(permuted).second == doctest::Approx(mean2));

    RunSet misaligned;
    misaligned.curves = {curve_of({1, 2, 3}), curve_of({1, 2})};
    CHECK_THROWS_AS(dr(misaligned), MetricError);
    RunSet single;
    single.curves = {curve_of({1, 2, 3})};
    CHECK_THROWS_AS(dr(single), MetricError);
}

TEST_CASE("dr_prime on identical runs and known z-scores") {
    RunSet identical;
    identical.curves = {curve_of({1, 2, 3, 4, 5}), curve_of({1, 2, 3, 4, 5})};
    CHECK(dr_prime(identical) == doctest::Approx(0.0));

    // Final-window means {0,1,2,3}: population sigma = sqrt(1.25), z-scores
    // (+-1.34164..., +-0.44721...), IQR of z = 1.3416407864998738.
    RunSet runs;
    runs.curves = {curve_of({0}), curve_of({1}), curve_of({2}), curve_of({3})};
    CHECK(dr_prime(runs) == doctest::Approx(1.3416407864998738).epsilon(1e-12));

    RunSet single;
    single.curves = {curve_of({1, 2})};
    CHECK_THROWS_AS(dr_prime(single), MetricError);
}

TEST_CASE("dr_prime is invariant under joint positive affine transforms") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 30; ++iter) {
        RunSet runs;
        for (int r = 0; r < 5; ++r) {
            std::vector<double> values(20);
            for (double& v : values) v = static_cast<double>(rng() % 1000) / 10.0;
            runs.curves.push_back(curve_of(std::move(values)));
        }
        const double a = 0.5 + static_cast<double>(rng() % 100) / 25.0;
        const double b = static_cast<double>(rng() % 200) - 100.0;
        RunSet transformed = runs;
        for (TrainingCurve& curve : transformed.curves) {
            for (double& v : curve.values) v = a * v + b;
        }
        CHECK(dr_prime(transformed) == doctest::Approx(dr_prime(runs)).epsilon(1e-12));
    }
}

TEST_CASE("var and cvar spot values") {
    CHECK(cvar_lower({1, 2}, 0.5) == doctest::Approx(1.0));
    std::vector<double> one_to_hundred;
    for (int i = 1; i <= 100; ++i) one_to_hundred.push_back(i);
    CHECK(cvar_lower(one_to_hundred, 0.05) == doctest::Approx(3.0));
    CHECK(cvar_upper(one_to_hundred, 0.05) == doctest::Approx(98.0));
    const std::vector<double> constant(7, 4.2);
    CHECK(cvar_lower(constant, 0.05) == doctest::Approx(4.2));
    CHECK(cvar_upper(constant, 0.05) == doctest::Approx(4.2));
    CHECK_THROWS_AS(var_alpha({}, 0.05), MetricError);
    CHECK_THROWS_AS(var_alpha({1.0}, 0.0), MetricError);
    CHECK_THROWS_AS(var_alpha({1.0}, 1.0), MetricError);
}

TEST_CASE("cvar bounds the mean on random inputs") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<double> v(1 + rng() % 30);
        for (double& x : v) x = static_cast<double>(rng() % 2000) / 7.0;
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= v.size();
        const double alpha = 0.01 + 0.98 * (static_cast<double>(rng() % 100) / 100.0);
        CHECK(cvar_lower(v, alpha) <= mean + 1e-9);
        CHECK(cvar_upper(v, alpha) >= mean - 1e-9);
    }
}

TEST_CASE("iqr, var and cvar match the brute-force oracle exhaustively") {
    // Every integer array of length 1..8 with entries in {0..4}.
    long mismatches = 0;
    long checked = 0;
    for (int len = 1; len <= 8; ++len) {
        std::vector<int> digits(len, 0);
        while (true) {
            std::vector<double> v(digits.begin(), digits.end());
            const double q1 = oracle_quantile(v, 0.25);
            const double q3 = oracle_quantile(v, 0.75);
            if (std::abs(iqr(v) - (q3 - q1)) > 1e-12) ++mismatches;
            const double var5 = oracle_quantile(v, 0.05);
            if (std::abs(var_alpha(v, 0.05) - var5) > 1e-12) ++mismatches;
            if (std::abs(cvar_lower(v, 0.05) - oracle_tail_mean_lower(v, var5)) > 1e-12) {
                ++mismatches;
            }
            const double var95 = oracle_quantile(v, 0.95);
            if (std::abs(cvar_upper(v, 0.05) - oracle_tail_mean_upper(v, var95)) > 1e-12) {
                ++mismatches;
            }
            ++checked;
            int pos = len - 1;
            while (pos >= 0 && digits[pos] == 4) digits[pos--] = 0;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    CHECK(checked == 5 + 25 + 125 + 625 + 3125 + 15625 + 78125 + 390625);
    CHECK(mismatches == 0);
}

TEST_CASE("ci95 arithmetic") {
    const std::vector<double> constant(5, 3.0);
    auto [clo, chi] = ci95(constant);
    CHECK(clo == doctest::Approx(3.0));
    CHECK(chi == doctest::Approx(3.0));

    // {0,2}: mean 1, sample sd sqrt(2), half-width 1.96 * sqrt(2)/sqrt(2) = 1.96
    auto [lo, hi] = ci95({0.0, 2.0});
    CHECK(lo == doctest::Approx(1.0 - 1.96));
    CHECK(hi == doctest::Approx(1.0 + 1.96));

    // duplicating every sample narrows the interval by 1/sqrt(2)
    std::vector<double> base = {1.0, 2.0, 4.0, 8.0};
    std::vector<double> doubled = base;
    doubled.insert(doubled.end(), base.begin(), base.end());
    auto [blo, bhi] = ci95(base);
    auto [dlo, dhi] = ci95(doubled);
    const double base_width = bhi - blo;
    const double doubled_width = dhi - dlo;
    // the duplicated sample's (n-1) sd shrinks slightly below the original
    const double sd_ratio = std::sqrt(8.0 / 7.0 * 3.0 / 4.0);
    CHECK(doubled_width == doctest::Approx(base_width * sd_ratio / std::sqrt(2.0)));

    CHECK_THROWS_AS(ci95({1.0}), MetricError);
}

TEST_CASE("default dt window") {
    CHECK(default_dt_window(5) == 2);
    CHECK(default_dt_window(20) == 2);
    CHECK(default_dt_window(50) == 5);
    CHECK(default_dt_window(250) == 25);
}

TEST_CASE("training log CSV parsing") {
    const auto path = std::filesystem::temp_directory_path() / "acdgym_trainlog_test.csv";
    {
        std::ofstream out(path);
        out << "run_id,training_step,mean_episodic_reward\n";
        out << "0,100,1.500000\n0,200,2.500000\n";
        out << "1,100,0.500000\n1,200,1.000000\n";
    }
    const RunSet runs = load_training_log_csv(path.string());
    REQUIRE(runs.curves.size() == 2);
    CHECK(runs.curves[0].steps == std::vector<std::int64_t>{100, 200});
    CHECK(runs.curves[0].values == std::vector<double>{1.5, 2.5});
    CHECK(runs.curves[1].values == std::vector<double>{0.5, 1.0});
    std::filesystem::remove(path);

    const auto bad = std::filesystem::temp_directory_path() / "acdgym_trainlog_bad.csv";
    {
        std::ofstream out(bad);
        out << "nope,nope,nope\n0,1,2\n";
    }
    CHECK_THROWS_AS(load_training_log_csv(bad.string()), ConfigError);
    std::filesystem::remove(bad);
}

TEST_CASE("risk summary invariants on a pooled distribution") {
    std::mt19937_64 rng(53);
    std::vector<double> scores(400);
    for (double& s : scores) s = static_cast<double>(rng() % 300) / 100.0;
    RunSet runs;
    for (int r = 0; r < 3; ++r) {
        std::vector<double> values(25);
        for (double& v : values) v = static_cast<double>(rng() % 100);
        runs.curves.push_back(curve_of(std::move(values)));
    }
    const RiskSummary summary = risk_summary(scores, runs);
    CHECK(summary.lower_rf <= summary.score_gt_mean);
    CHECK(summary.score_gt_mean <= summary.upper_rf);
    CHECK(summary.ci_lower <= summary.score_gt_mean);
    CHECK(summary.score_gt_mean <= summary.ci_upper);
}
