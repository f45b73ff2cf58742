// Command-line front end for the cyber-defence gym harness.
//
// Subcommands: train, evaluate, report, sweep.

#include <CLI11.hpp>
#include <iostream>

#include "acdgym/csv.hpp"
#include "acdgym/harness.hpp"

namespace {

acd::ExperimentConfig resolve_config(const std::string& config_path,
                                     const std::string& preset_name,
                                     const std::string& out_dir, long long seed, int runs) {
    acd::ExperimentConfig config;
    if (!preset_name.empty()) {
        config = acd::preset(preset_name);
    }
    if (!config_path.empty()) {
        config = acd::load_config_file(config_path);
    }
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (seed >= 0) config.base_seed = static_cast<std::uint64_t>(seed);
    if (runs > 0) config.runs = runs;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Autonomous cyber defence gym: training, evaluation and reporting"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand name

    std::string config_path;
    std::string preset_name;
    std::string out_dir;
    long long seed = -1;
    int runs = 0;
    app.add_option("--config", config_path, "JSON experiment config")->expected(1);
    app.add_option("--preset", preset_name, "named preset configuration")->expected(1);
    app.add_option("--out", out_dir, "output directory override")->expected(1);
    app.add_option("--seed", seed, "base seed override")->expected(1);
    app.add_option("--runs", runs, "number of runs override")->expected(1);

    CLI::App* train = app.add_subcommand("train", "train one configuration across seeds");

    CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a checkpoint or scripted policy");
    std::string checkpoint;
    std::string policy;
    evaluate->add_option("--checkpoint", checkpoint, "checkpoint.json from a training run");
    evaluate->add_option("--policy", policy,
                         "scripted policy name (NOOP, RESTORE_FRONTIER, DECOY_FRONTIER, "
                         "SLEEP_ONLY, RESTORE_KNOWN)");

    CLI::App* report = app.add_subcommand("report", "summarise completed run directories");
    std::vector<std::string> run_dirs;
    report->add_option("dirs", run_dirs, "run directories")->expected(-1);

    CLI::App* sweep = app.add_subcommand("sweep", "train the sizes x orders x rewards grid");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!preset_name.empty() && config_path.empty()) {
            // fall through: preset provides the whole config
        }
        if (app.got_subcommand(train)) {
            acd::ExperimentConfig config =
                resolve_config(config_path, preset_name, out_dir, seed, runs);
            acd::cmd_train(config);
            std::cout << "trained " << config.runs << " runs into " << config.out_dir << '\n';
        } else if (app.got_subcommand(evaluate)) {
            acd::ExperimentConfig config =
                resolve_config(config_path, preset_name, out_dir, seed, runs);
            const std::string source = !policy.empty() ? policy : checkpoint;
            if (source.empty()) {
                std::cerr << "evaluate needs --checkpoint or --policy\n";
                return 1;
            }
            const std::string dest = config.out_dir.empty() ? "eval" : config.out_dir;
            const acd::RolloutResult result = acd::cmd_evaluate(config, source, dest);
            std::cout << "episodes=" << result.behaviour.episodes
                      << " mean_score_gt=" << acd::fmt6(result.behaviour.mean_score_gt)
                      << " mean_episodic_reward="
                      << acd::fmt6(result.behaviour.mean_episodic_reward) << '\n';
        } else if (app.got_subcommand(report)) {
            if (run_dirs.empty()) {
                std::cerr << "report needs at least one run directory\n";
                return 1;
            }
            const std::string dest = out_dir.empty() ? "report" : out_dir;
            acd::cmd_report(run_dirs, dest);
            std::cout << "wrote " << dest << "/summary.csv\n";
        } else if (app.got_subcommand(sweep)) {
            acd::ExperimentConfig config =
                resolve_config(config_path, preset_name, out_dir, seed, runs);
            acd::cmd_sweep(config);
            std::cout << "sweep complete under " << config.out_dir << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
