#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acdgym/errors.hpp"

namespace acd {

// One run's training curve: mean episodic reward at each evaluation step.
struct TrainingCurve {
    std::vector<std::int64_t> steps;
    std::vector<double> values;
};

// Multiple runs with identical evaluation-step grids.
struct RunSet {
    std::vector<TrainingCurve> curves;
};

// Linear-interpolation quantile over order statistics (position (n-1)*q).
double quantile(std::vector<double> values, double q);

// Q3 - Q1. Throws MetricError on empty input.
double iqr(const std::vector<double>& values);

// First differences y'_t = y_t - y_{t-1}; length >= 2 required.
std::vector<double> detrend(const std::vector<double>& curve);

// Mean sliding-window IQR of the detrended curve. window >= 2 and the
// detrended curve must be at least window long.
double dt(const std::vector<double>& curve, int window);
double dt_mean(const RunSet& runs, int window);

// Default window: max(2, 10% of evaluation points).
int default_dt_window(int eval_points);

// Per-evaluation-step IQR across runs, plus its mean. Requires >= 2 runs on
// aligned grids.
std::pair<std::vector<double>, double> dr(const RunSet& runs);

// Normalised dispersion across runs: z-scores of final-20%-window run means,
// then IQR. Zero when the run means coincide.
double dr_prime(const RunSet& runs);

double var_alpha(const std::vector<double>& values, double alpha);

// Mean of the tail at or below VaR_alpha / at or above VaR_{1-alpha}. The
// extreme order statistic is included when interpolation would otherwise
// leave the tail empty.
double cvar_lower(const std::vector<double>& values, double alpha);
double cvar_upper(const std::vector<double>& values, double alpha);

// mean +- 1.96 * sd / sqrt(n) with the sample (n-1) standard deviation.
std::pair<double, double> ci95(const std::vector<double>& values);

// Summary row in Table-2 column order.
struct RiskSummary {
    double score_gt_mean = 0.0;
    double lower_rf = 0.0;
    double upper_rf = 0.0;
    double dt_mean = 0.0;
    double dr_prime = 0.0;
    double ci_lower = 0.0;
    double ci_upper = 0.0;
};

// Computes the full summary from per-episode mean scores (pooled across the
// group's runs) and the group's training curves. alpha = 0.05 per protocol.
RiskSummary risk_summary(const std::vector<double>& episode_scores, const RunSet& runs);

// Parses a training-log CSV (run_id, training_step, mean_episodic_reward)
// into per-run curves ordered by run id; verifies aligned grids.
RunSet load_training_log_csv(const std::string& path);

}  // namespace acd
