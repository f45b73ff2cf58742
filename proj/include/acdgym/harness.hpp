#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "acdgym/cage_env.hpp"
#include "acdgym/learners.hpp"
#include "acdgym/reliability.hpp"
#include "acdgym/scripted.hpp"
#include "acdgym/yt_env.hpp"

namespace acd {

// Cartesian product axes for the sweep command; empty axes fall back to the
// base config's single value.
struct SweepSpec {
    std::vector<int> sizes;
    std::vector<std::string> orders;
    std::vector<std::string> rewards;
};

struct ExperimentConfig {
    std::string environment = "YT";  // YT | CAGE
    YtConfig yt;
    CageConfig cage;
    RewardKind reward = RewardKind::Sp;
    std::string learner = "QTABLE";  // PPO | DQN | QTABLE or a scripted policy name
    std::int64_t total_steps = 0;    // 0 = per-environment default
    int runs = 25;
    int eval_episodes = 1000;
    std::uint64_t base_seed = 1;
    std::string out_dir = "runs";
    int eval_cadence = 10000;
    int eval_episodes_per_point = 5;
    int threads = 0;  // 0 = hardware concurrency
    PpoConfig ppo;
    DqnConfig dqn;
    QTableConfig qtable;
    SweepSpec sweep;
};

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& blob);
ExperimentConfig load_config_file(const std::string& path);

// Paper protocol: training steps scale with YT network size.
std::int64_t default_yt_training_steps(int node_count);

// Fills derived defaults (total steps) and validates; throws ConfigError.
void finalize(ExperimentConfig& config);

std::unique_ptr<Environment> make_environment(const ExperimentConfig& config,
                                              std::uint64_t seed);
std::unique_ptr<Learner> make_learner(const ExperimentConfig& config, const Environment& env,
                                      std::uint64_t seed);

struct RunOutput {
    std::uint64_t run_seed = 0;
    TrainingCurve curve;
    RolloutResult evaluation;
};

// One training run: train, log evaluation points, evaluate the final policy,
// and write config.json, training_log.csv, evaluation.csv, behaviour.csv and
// checkpoint.json into run_dir. Deterministic given (config, run_index).
RunOutput execute_run(const ExperimentConfig& config, int run_index,
                      const std::filesystem::path& run_dir);

// Runs `config.runs` runs (seeds base_seed + run_index) fanned out over
// worker threads, one run directory each.
void cmd_train(const ExperimentConfig& config);

// Evaluates a checkpoint file or a scripted policy name for
// config.eval_episodes episodes; writes evaluation/behaviour CSVs to out_dir.
RolloutResult cmd_evaluate(const ExperimentConfig& config, const std::string& source,
                           const std::filesystem::path& out_dir);

struct SummaryRow {
    std::string environment;
    int network_size = 0;
    std::string agent_order;
    RewardKind reward = RewardKind::Sp;
    int runs = 0;
    RiskSummary summary;
};

// Groups completed run directories by (environment, size, order, reward) and
// computes one summary row per group. Incomplete directories are skipped with
// a warning; throws if none survive.
std::vector<SummaryRow> compute_report(const std::vector<std::string>& run_dirs);

// Writes summary.csv (Table-2 column order) and behaviour_matrix.csv
// (counter rows, one column per reward function) under out_dir.
void cmd_report(const std::vector<std::string>& run_dirs, const std::filesystem::path& out_dir);

// Cartesian product over sweep.sizes x sweep.orders x sweep.rewards; trains
// each combination into its own subdirectory of out_dir.
void cmd_sweep(const ExperimentConfig& config);

ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace acd
