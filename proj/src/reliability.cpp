#include "acdgym/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "acdgym/csv.hpp"

namespace acd {

namespace {

double mean_of(const std::vector<double>& values) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = (static_cast<double>(n) - 1.0) * q;
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

double quantile(std::vector<double> values, double q) {
    if (values.empty()) {
        throw MetricError("quantile of empty input");
    }
    std::sort(values.begin(), values.end());
    return quantile_sorted(values, q);
}

double iqr(const std::vector<double>& values) {
    if (values.empty()) {
        throw MetricError("iqr of empty input");
    }
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    return quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
}

std::vector<double> detrend(const std::vector<double>& curve) {
    if (curve.size() < 2) {
        throw MetricError("detrend needs at least 2 points");
    }
    std::vector<double> diffs(curve.size() - 1);
    for (std::size_t t = 1; t < curve.size(); ++t) {
        diffs[t - 1] = curve[t] - curve[t - 1];
    }
    return diffs;
}

double dt(const std::vector<double>& curve, int window) {
    if (window < 2) {
        throw MetricError("dt window must be >= 2");
    }
    const std::vector<double> diffs = detrend(curve);
    if (diffs.size() < static_cast<std::size_t>(window)) {
        throw MetricError("dt window exceeds detrended curve length");
    }
    const std::size_t w = static_cast<std::size_t>(window);
    double total = 0.0;
    std::size_t count = 0;
    std::vector<double> slice(w);
    for (std::size_t start = 0; start + w <= diffs.size(); ++start) {
        std::copy(diffs.begin() + start, diffs.begin() + start + w, slice.begin());
        total += iqr(slice);
        ++count;
    }
    return total / static_cast<double>(count);
}

double dt_mean(const RunSet& runs, int window) {
    if (runs.curves.empty()) {
        throw MetricError("dt_mean needs at least one run");
    }
    double total = 0.0;
    for (const TrainingCurve& curve : runs.curves) {
        total += dt(curve.values, window);
    }
    return total / static_cast<double>(runs.curves.size());
}

int default_dt_window(int eval_points) {
    return std::max(2, eval_points / 10);
}

namespace {

void check_aligned(const RunSet& runs) {
    const TrainingCurve& first = runs.curves.front();
    for (const TrainingCurve& curve : runs.curves) {
        if (curve.steps != first.steps) {
            throw MetricError("training curves have misaligned evaluation grids");
        }
    }
}

}  // namespace

std::pair<std::vector<double>, double> dr(const RunSet& runs) {
    if (runs.curves.size() < 2) {
        throw MetricError("dr needs at least 2 runs");
    }
    check_aligned(runs);
    const std::size_t points = runs.curves.front().values.size();
    std::vector<double> per_step(points);
    std::vector<double> column(runs.curves.size());
    for (std::size_t t = 0; t < points; ++t) {
        for (std::size_t i = 0; i < runs.curves.size(); ++i) {
            column[i] = runs.curves[i].values[t];
        }
        per_step[t] = iqr(column);
    }
    const double mean = per_step.empty() ? 0.0 : mean_of(per_step);
    return {std::move(per_step), mean};
}

double dr_prime(const RunSet& runs) {
    if (runs.curves.size() < 2) {
        throw MetricError("dr_prime needs at least 2 runs");
    }
    check_aligned(runs);
    const std::size_t points = runs.curves.front().values.size();
    if (points == 0) {
        throw MetricError("dr_prime needs non-empty curves");
    }
    // Final 20% of evaluation points, rounded up, at least one.
    const std::size_t window = std::max<std::size_t>(1, (points + 4) / 5);
    std::vector<double> run_means(runs.curves.size());
    for (std::size_t i = 0; i < runs.curves.size(); ++i) {
        const std::vector<double>& v = runs.curves[i].values;
        run_means[i] = std::accumulate(v.end() - window, v.end(), 0.0) /
                       static_cast<double>(window);
    }
    const double mu = mean_of(run_means);
    double var = 0.0;
    for (double r : run_means) var += (r - mu) * (r - mu);
    var /= static_cast<double>(run_means.size());  // population variance
    const double sigma = std::sqrt(var);
    if (sigma == 0.0) return 0.0;
    std::vector<double> z(run_means.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = (run_means[i] - mu) / sigma;
    }
    return iqr(z);
}

double var_alpha(const std::vector<double>& values, double alpha) {
    if (values.empty()) {
        throw MetricError("var_alpha of empty input");
    }
    if (alpha <= 0.0 || alpha >= 1.0) {
        throw MetricError("alpha must be in (0, 1)");
    }
    return quantile(values, alpha);
}

double cvar_lower(const std::vector<double>& values, double alpha) {
    const double threshold = var_alpha(values, alpha);
    double total = 0.0;
    int count = 0;
    for (double v : values) {
        if (v <= threshold) {
            total += v;
            ++count;
        }
    }
    if (count == 0) {
        return *std::min_element(values.begin(), values.end());
    }
    return total / count;
}

double cvar_upper(const std::vector<double>& values, double alpha) {
    const double threshold = var_alpha(values, 1.0 - alpha);
    double total = 0.0;
    int count = 0;
    for (double v : values) {
        if (v >= threshold) {
            total += v;
            ++count;
        }
    }
    if (count == 0) {
        return *std::max_element(values.begin(), values.end());
    }
    return total / count;
}

std::pair<double, double> ci95(const std::vector<double>& values) {
    if (values.size() < 2) {
        throw MetricError("ci95 needs at least 2 values");
    }
    const double mu = mean_of(values);
    double var = 0.0;
    for (double v : values) var += (v - mu) * (v - mu);
    var /= static_cast<double>(values.size() - 1);
    const double half = 1.96 * std::sqrt(var) / std::sqrt(static_cast<double>(values.size()));
    return {mu - half, mu + half};
}

RiskSummary risk_summary(const std::vector<double>& episode_scores, const RunSet& runs) {
    if (episode_scores.empty()) {
        throw MetricError("risk_summary needs evaluation scores");
    }
    RiskSummary summary;
    summary.score_gt_mean = mean_of(episode_scores);
    summary.lower_rf = cvar_lower(episode_scores, 0.05);
    summary.upper_rf = cvar_upper(episode_scores, 0.05);
    if (episode_scores.size() >= 2) {
        auto [lo, hi] = ci95(episode_scores);
        summary.ci_lower = lo;
        summary.ci_upper = hi;
    } else {
        summary.ci_lower = summary.ci_upper = summary.score_gt_mean;
    }
    if (!runs.curves.empty()) {
        const int points = static_cast<int>(runs.curves.front().values.size());
        // A window needs at least 2 detrended values; curves with fewer than
        // 3 evaluation points have no defined DT and report 0.
        if (points >= 3) {
            const int window = std::min(default_dt_window(points), points - 1);
            summary.dt_mean = dt_mean(runs, window);
        }
        summary.dr_prime = runs.curves.size() >= 2 ? dr_prime(runs) : 0.0;
    }
    return summary;
}

RunSet load_training_log_csv(const std::string& path) {
    std::vector<std::string> header;
    const auto rows = read_csv(path, &header);
    if (header.size() < 3 || header[0] != "run_id" || header[1] != "training_step" ||
        header[2] != "mean_episodic_reward") {
        throw ConfigError("unexpected training-log header in " + path);
    }
    std::map<long, TrainingCurve> by_run;
    for (const auto& row : rows) {
        if (row.size() < 3) {
            throw ConfigError("short row in training log " + path);
        }
        TrainingCurve& curve = by_run[std::stol(row[0])];
        curve.steps.push_back(std::stoll(row[1]));
        curve.values.push_back(std::stod(row[2]));
    }
    RunSet runs;
    for (auto& [id, curve] : by_run) {
        runs.curves.push_back(std::move(curve));
    }
    if (runs.curves.size() > 1) {
        check_aligned(runs);
    }
    return runs;
}

}  // namespace acd
