#include "acdgym/harness.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>
#include <tuple>

#include "acdgym/csv.hpp"
#include "acdgym/rng.hpp"

namespace acd {

namespace fs = std::filesystem;
using nlohmann::json;

nlohmann::json config_to_json(const ExperimentConfig& c) {
    json blob;
    blob["environment"] = c.environment;
    blob["reward"] = to_string(c.reward);
    blob["learner"] = c.learner;
    blob["total_steps"] = c.total_steps;
    blob["runs"] = c.runs;
    blob["eval_episodes"] = c.eval_episodes;
    blob["base_seed"] = c.base_seed;
    blob["out_dir"] = c.out_dir;
    blob["eval_cadence"] = c.eval_cadence;
    blob["eval_episodes_per_point"] = c.eval_episodes_per_point;
    blob["threads"] = c.threads;
    blob["yt"] = {{"node_count", c.yt.node_count},
                  {"action_space", to_string(c.yt.action_space)},
                  {"agent_order", to_string(c.yt.agent_order)},
                  {"episode_length", c.yt.episode_length},
                  {"red_attack_probability", c.yt.red_attack_probability}};
    blob["cage"] = {{"episode_length", c.cage.episode_length}};
    blob["ppo"] = {{"learning_rate", c.ppo.learning_rate},
                   {"gae_lambda", c.ppo.gae_lambda},
                   {"clip_range", c.ppo.clip_range},
                   {"gamma", c.ppo.gamma},
                   {"value_coef", c.ppo.value_coef},
                   {"epochs", c.ppo.epochs},
                   {"minibatch", c.ppo.minibatch},
                   {"horizon", c.ppo.horizon},
                   {"hidden_size", c.ppo.hidden_size}};
    blob["dqn"] = {{"learning_rate", c.dqn.learning_rate},
                   {"batch", c.dqn.batch},
                   {"gamma", c.dqn.gamma},
                   {"train_frequency", c.dqn.train_frequency},
                   {"buffer_capacity", c.dqn.buffer_capacity},
                   {"epsilon_initial", c.dqn.epsilon_initial},
                   {"epsilon_final", c.dqn.epsilon_final},
                   {"exploration_fraction", c.dqn.exploration_fraction},
                   {"target_refresh", c.dqn.target_refresh},
                   {"learning_starts", c.dqn.learning_starts},
                   {"hidden_size", c.dqn.hidden_size}};
    blob["qtable"] = {{"learning_rate", c.qtable.learning_rate},
                      {"gamma", c.qtable.gamma},
                      {"epsilon_initial", c.qtable.epsilon_initial},
                      {"epsilon_final", c.qtable.epsilon_final},
                      {"exploration_fraction", c.qtable.exploration_fraction}};
    blob["sweep"] = {{"sizes", c.sweep.sizes},
                     {"orders", c.sweep.orders},
                     {"rewards", c.sweep.rewards}};
    return blob;
}

namespace {

template <typename T>
void maybe_get(const json& blob, const char* key, T& dest) {
    if (blob.contains(key)) dest = blob.at(key).get<T>();
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& blob) {
    ExperimentConfig c;
    maybe_get(blob, "environment", c.environment);
    if (blob.contains("reward")) {
        c.reward = reward_kind_from_string(blob.at("reward").get<std::string>());
    }
    maybe_get(blob, "learner", c.learner);
    maybe_get(blob, "total_steps", c.total_steps);
    maybe_get(blob, "runs", c.runs);
    maybe_get(blob, "eval_episodes", c.eval_episodes);
    maybe_get(blob, "base_seed", c.base_seed);
    maybe_get(blob, "out_dir", c.out_dir);
    maybe_get(blob, "eval_cadence", c.eval_cadence);
    maybe_get(blob, "eval_episodes_per_point", c.eval_episodes_per_point);
    maybe_get(blob, "threads", c.threads);
    if (blob.contains("yt")) {
        const json& yt = blob.at("yt");
        maybe_get(yt, "node_count", c.yt.node_count);
        if (yt.contains("action_space")) {
            c.yt.action_space = yt_action_space_from_string(yt.at("action_space").get<std::string>());
        }
        if (yt.contains("agent_order")) {
            c.yt.agent_order = agent_order_from_string(yt.at("agent_order").get<std::string>());
        }
        maybe_get(yt, "episode_length", c.yt.episode_length);
        maybe_get(yt, "red_attack_probability", c.yt.red_attack_probability);
    }
    if (blob.contains("cage")) {
        maybe_get(blob.at("cage"), "episode_length", c.cage.episode_length);
    }
    if (blob.contains("ppo")) {
        const json& p = blob.at("ppo");
        maybe_get(p, "learning_rate", c.ppo.learning_rate);
        maybe_get(p, "gae_lambda", c.ppo.gae_lambda);
        maybe_get(p, "clip_range", c.ppo.clip_range);
        maybe_get(p, "gamma", c.ppo.gamma);
        maybe_get(p, "value_coef", c.ppo.value_coef);
        maybe_get(p, "epochs", c.ppo.epochs);
        maybe_get(p, "minibatch", c.ppo.minibatch);
        maybe_get(p, "horizon", c.ppo.horizon);
        maybe_get(p, "hidden_size", c.ppo.hidden_size);
    }
    if (blob.contains("dqn")) {
        const json& d = blob.at("dqn");
        maybe_get(d, "learning_rate", c.dqn.learning_rate);
        maybe_get(d, "batch", c.dqn.batch);
        maybe_get(d, "gamma", c.dqn.gamma);
        maybe_get(d, "train_frequency", c.dqn.train_frequency);
        maybe_get(d, "buffer_capacity", c.dqn.buffer_capacity);
        maybe_get(d, "epsilon_initial", c.dqn.epsilon_initial);
        maybe_get(d, "epsilon_final", c.dqn.epsilon_final);
        maybe_get(d, "exploration_fraction", c.dqn.exploration_fraction);
        maybe_get(d, "target_refresh", c.dqn.target_refresh);
        maybe_get(d, "learning_starts", c.dqn.learning_starts);
        maybe_get(d, "hidden_size", c.dqn.hidden_size);
    }
    if (blob.contains("qtable")) {
        const json& q = blob.at("qtable");
        maybe_get(q, "learning_rate", c.qtable.learning_rate);
        maybe_get(q, "gamma", c.qtable.gamma);
        maybe_get(q, "epsilon_initial", c.qtable.epsilon_initial);
        maybe_get(q, "epsilon_final", c.qtable.epsilon_final);
        maybe_get(q, "exploration_fraction", c.qtable.exploration_fraction);
    }
    if (blob.contains("sweep")) {
        const json& s = blob.at("sweep");
        maybe_get(s, "sizes", c.sweep.sizes);
        maybe_get(s, "orders", c.sweep.orders);
        maybe_get(s, "rewards", c.sweep.rewards);
    }
    return c;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    json blob;
    try {
        in >> blob;
    } catch (const json::exception& e) {
        throw ConfigError("invalid JSON in " + path + ": " + e.what());
    }
    return config_from_json(blob);
}

std::int64_t default_yt_training_steps(int node_count) {
    if (node_count <= 2) return 500'000;
    if (node_count <= 5) return 1'000'000;
    if (node_count <= 10) return 1'500'000;
    if (node_count <= 20) return 2'000'000;
    return 2'500'000;
}

void finalize(ExperimentConfig& c) {
    if (c.environment != "YT" && c.environment != "CAGE") {
        throw ConfigError("environment must be YT or CAGE, got " + c.environment);
    }
    if (c.total_steps == 0) {
        c.total_steps = c.environment == "YT" ? default_yt_training_steps(c.yt.node_count)
                                              : 2'500'000;
    }
    if (c.total_steps < 0) {
        throw ConfigError("total_steps must be positive");
    }
    if (c.runs < 1) {
        throw ConfigError("runs must be >= 1");
    }
    if (c.eval_episodes < 1 || c.eval_episodes_per_point < 1) {
        throw ConfigError("evaluation episode counts must be >= 1");
    }
    if (c.eval_cadence < 1) {
        throw ConfigError("eval_cadence must be >= 1");
    }
    const RewardEnv env = c.environment == "YT" ? RewardEnv::Yt : RewardEnv::Cage;
    validate(RewardSpec{c.reward, env});
    const bool trainable = c.learner == "PPO" || c.learner == "DQN" || c.learner == "QTABLE";
    if (!trainable && !is_scripted_policy(c.learner)) {
        throw ConfigError("unknown learner: " + c.learner);
    }
    if (c.learner == "QTABLE") {
        if (c.environment != "YT") {
            throw ConfigError("QTABLE supports only the YT environment");
        }
        if (c.yt.node_count > 10) {
            throw ConfigError("QTABLE supports YT networks with at most 10 nodes");
        }
    }
}

std::unique_ptr<Environment> make_environment(const ExperimentConfig& c, std::uint64_t seed) {
    if (c.environment == "YT") {
        YtConfig yt = c.yt;
        yt.reward = RewardSpec{c.reward, RewardEnv::Yt};
        yt.rng_seed = seed;
        return std::make_unique<YtEnv>(yt);
    }
    CageConfig cage = c.cage;
    cage.reward = RewardSpec{c.reward, RewardEnv::Cage};
    cage.rng_seed = seed;
    return std::make_unique<CageEnv>(cage);
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& c, const Environment& env,
                                      std::uint64_t seed) {
    if (c.learner == "PPO") {
        return std::make_unique<PpoAgent>(env.observation_size(), env.action_count(), c.ppo,
                                          seed);
    }
    if (c.learner == "DQN") {
        return std::make_unique<DqnAgent>(env.observation_size(), env.action_count(), c.dqn,
                                          c.total_steps, seed);
    }
    if (c.learner == "QTABLE") {
        return std::make_unique<QTableAgent>(c.yt.node_count, env.action_count(), c.qtable,
                                             c.total_steps, seed);
    }
    throw ConfigError("learner is not trainable: " + c.learner);
}

RunOutput execute_run(const ExperimentConfig& config, int run_index,
                      const fs::path& run_dir) {
    fs::create_directories(run_dir);
    const std::uint64_t run_seed = config.base_seed + static_cast<std::uint64_t>(run_index);

    json snapshot = config_to_json(config);
    snapshot["run_index"] = run_index;
    snapshot["run_seed"] = run_seed;
    {
        std::ofstream out(run_dir / "config.json");
        out << snapshot.dump(2) << '\n';
    }

    auto env = make_environment(config, derive_seed(run_seed, 0));
    auto learner = make_learner(config, *env, derive_seed(run_seed, 1));
    auto eval_env = make_environment(config, derive_seed(run_seed, 2));

    RunOutput output;
    output.run_seed = run_seed;

    std::ofstream log(run_dir / "training_log.csv");
    log << "run_id,training_step,mean_episodic_reward\n";

    std::vector<double> obs = env->observe();
    for (std::int64_t step = 1; step <= config.total_steps; ++step) {
        const int action = learner->begin_step(obs);
        const StepRecord rec = env->step_action(action);
        learner->end_step(rec.reward, rec.observation, rec.done);
        obs = rec.done ? env->reset() : rec.observation;

        const bool at_point = step % config.eval_cadence == 0 ||
                              (step == config.total_steps &&
                               config.total_steps % config.eval_cadence != 0);
        if (at_point) {
            const RolloutResult point =
                rollout(*eval_env, learner->greedy_policy(), config.eval_episodes_per_point,
                        derive_seed(run_seed, 1'000'000 + static_cast<std::uint64_t>(step)));
            log << run_index << ',' << step << ','
                << fmt6(point.behaviour.mean_episodic_reward) << '\n';
            output.curve.steps.push_back(step);
            output.curve.values.push_back(point.behaviour.mean_episodic_reward);
        }
    }
    log.close();

    {
        std::ofstream out(run_dir / "checkpoint.json");
        out << learner->save_checkpoint().dump() << '\n';
    }

    output.evaluation = rollout(*eval_env, learner->greedy_policy(), config.eval_episodes,
                                derive_seed(run_seed, 3));
    write_evaluation_csv((run_dir / "evaluation.csv").string(), output.evaluation,
                         env->action_tags());
    write_behaviour_csv((run_dir / "behaviour.csv").string(), output.evaluation.behaviour,
                        env->action_tags());
    return output;
}

void cmd_train(const ExperimentConfig& raw) {
    ExperimentConfig config = raw;
    finalize(config);
    if (!(config.learner == "PPO" || config.learner == "DQN" || config.learner == "QTABLE")) {
        throw ConfigError("train requires a trainable learner (PPO, DQN or QTABLE)");
    }
    const fs::path out_dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw ConfigError("cannot create output directory " + config.out_dir + ": " +
                          ec.message());
    }

    int workers = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, config.runs));

    std::atomic<int> next_run{0};
    std::vector<std::string> errors(config.runs);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int run; (run = next_run.fetch_add(1)) < config.runs;) {
                try {
                    execute_run(config, run, out_dir / ("run_" + std::to_string(run)));
                } catch (const std::exception& e) {
                    errors[run] = e.what();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (int run = 0; run < config.runs; ++run) {
        if (!errors[run].empty()) {
            throw ConfigError("run " + std::to_string(run) + " failed: " + errors[run]);
        }
    }
}

RolloutResult cmd_evaluate(const ExperimentConfig& raw, const std::string& source,
                           const fs::path& out_dir) {
    ExperimentConfig config = raw;
    finalize(config);

    auto env = make_environment(config, derive_seed(config.base_seed, 2));
    PolicyFn policy;
    PolicyTiming timing = PolicyTiming::StepStart;
    if (is_scripted_policy(source)) {
        YtConfig yt = config.yt;
        yt.reward = RewardSpec{config.reward, RewardEnv::Yt};
        policy = make_scripted_policy(source, yt);
        timing = PolicyTiming::BlueTurn;
    } else {
        std::ifstream in(source);
        if (!in) {
            throw ConfigError("checkpoint not found: " + source);
        }
        json blob;
        try {
            in >> blob;
        } catch (const json::exception& e) {
            throw ConfigError("invalid checkpoint JSON: " + std::string(e.what()));
        }
        ExperimentConfig learner_config = config;
        learner_config.learner = blob.value("learner", config.learner);
        auto learner = make_learner(learner_config, *env, /*seed=*/0);
        learner->load_checkpoint(blob);
        policy = learner->greedy_policy();
    }

    const RolloutResult result =
        rollout(*env, policy, config.eval_episodes, derive_seed(config.base_seed, 3), timing);
    fs::create_directories(out_dir);
    write_evaluation_csv((out_dir / "evaluation.csv").string(), result, env->action_tags());
    write_behaviour_csv((out_dir / "behaviour.csv").string(), result.behaviour,
                        env->action_tags());
    return result;
}

namespace {

struct GroupKey {
    std::string environment;
    int network_size = 0;
    std::string agent_order;
    std::string reward;

    bool operator<(const GroupKey& other) const {
        return std::tie(environment, network_size, agent_order, reward) <
               std::tie(other.environment, other.network_size, other.agent_order, other.reward);
    }
};

struct GroupData {
    std::vector<double> episode_scores;
    RunSet runs;
    // counter name -> accumulated mean values (averaged over runs at the end)
    std::map<std::string, double> behaviour_totals;
    int behaviour_runs = 0;
};

}  // namespace

std::vector<SummaryRow> compute_report(const std::vector<std::string>& run_dirs) {
    std::map<GroupKey, GroupData> groups;
    int loaded = 0;
    for (const std::string& dir : run_dirs) {
        try {
            std::ifstream in(fs::path(dir) / "config.json");
            if (!in) {
                throw ConfigError("missing config.json");
            }
            json blob;
            in >> blob;
            GroupKey key;
            key.environment = blob.at("environment").get<std::string>();
            key.reward = blob.at("reward").get<std::string>();
            if (key.environment == "YT") {
                key.network_size = blob.at("yt").at("node_count").get<int>();
                key.agent_order = blob.at("yt").at("agent_order").get<std::string>();
            } else {
                key.network_size = kCageHostCount;
                key.agent_order = "RED_BLUE";  // fixed in CAGE
            }

            std::vector<std::string> header;
            const auto rows = read_csv((fs::path(dir) / "evaluation.csv").string(), &header);
            if (header.size() < 2 || header[1] != "mean_score_gt") {
                throw ConfigError("unexpected evaluation.csv header");
            }
            GroupData& group = groups[key];
            for (const auto& row : rows) {
                group.episode_scores.push_back(std::stod(row.at(1)));
            }

            RunSet run_set = load_training_log_csv((fs::path(dir) / "training_log.csv").string());
            for (TrainingCurve& curve : run_set.curves) {
                group.runs.curves.push_back(std::move(curve));
            }

            std::vector<std::string> bheader;
            const auto brows = read_csv((fs::path(dir) / "behaviour.csv").string(), &bheader);
            for (const auto& row : brows) {
                if (row.size() >= 2) {
                    group.behaviour_totals[row[0]] += std::stod(row[1]);
                }
            }
            ++group.behaviour_runs;
            ++loaded;
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping " << dir << ": " << e.what() << '\n';
        }
    }
    if (loaded == 0) {
        throw ConfigError("no complete run directories found");
    }

    std::vector<SummaryRow> rows;
    for (auto& [key, data] : groups) {
        SummaryRow row;
        row.environment = key.environment;
        row.network_size = key.network_size;
        row.agent_order = key.agent_order;
        row.reward = reward_kind_from_string(key.reward);
        row.runs = static_cast<int>(data.runs.curves.size());
        row.summary = risk_summary(data.episode_scores, data.runs);
        rows.push_back(row);
    }
    return rows;
}

namespace {

// Behaviour matrix: one column per reward function, in the paper's order.
const std::vector<std::string> kMatrixRewards = {"SP", "SN", "SPN", "DN", "CDN", "ABLATED_SP"};

void write_behaviour_matrix(const fs::path& path,
                            const std::map<GroupKey, GroupData>& groups);

}  // namespace

void cmd_report(const std::vector<std::string>& run_dirs, const fs::path& out_dir) {
    // Recollect raw group data for the behaviour matrix alongside the summary.
    std::map<GroupKey, GroupData> groups;
    const std::vector<SummaryRow> rows = compute_report(run_dirs);
    for (const std::string& dir : run_dirs) {
        try {
            std::ifstream in(fs::path(dir) / "config.json");
            if (!in) continue;
            json blob;
            in >> blob;
            GroupKey key;
            key.environment = blob.at("environment").get<std::string>();
            key.reward = blob.at("reward").get<std::string>();
            if (key.environment == "YT") {
                key.network_size = blob.at("yt").at("node_count").get<int>();
                key.agent_order = blob.at("yt").at("agent_order").get<std::string>();
            } else {
                key.network_size = kCageHostCount;
                key.agent_order = "RED_BLUE";
            }
            std::vector<std::string> bheader;
            const auto brows = read_csv((fs::path(dir) / "behaviour.csv").string(), &bheader);
            GroupData& group = groups[key];
            for (const auto& row : brows) {
                if (row.size() >= 2) {
                    group.behaviour_totals[row[0]] += std::stod(row[1]);
                }
            }
            ++group.behaviour_runs;
        } catch (const std::exception&) {
            continue;  // already warned in compute_report
        }
    }

    fs::create_directories(out_dir);
    std::ofstream out(out_dir / "summary.csv");
    out << "reward_function,score_gt,lower_rf,upper_rf,dt_mean,dr_prime,ci_ll,ci_ul,"
           "environment,network_size,agent_order,runs\n";
    for (const SummaryRow& row : rows) {
        out << to_string(row.reward) << ',' << fmt6(row.summary.score_gt_mean) << ','
            << fmt6(row.summary.lower_rf) << ',' << fmt6(row.summary.upper_rf) << ','
            << fmt6(row.summary.dt_mean) << ',' << fmt6(row.summary.dr_prime) << ','
            << fmt6(row.summary.ci_lower) << ',' << fmt6(row.summary.ci_upper) << ','
            << row.environment << ',' << row.network_size << ',' << row.agent_order << ','
            << row.runs << '\n';
    }
    out.close();

    write_behaviour_matrix(out_dir / "behaviour_matrix.csv", groups);
}

namespace {

void write_behaviour_matrix(const fs::path& path,
                            const std::map<GroupKey, GroupData>& groups) {
    // Regroup by (environment, size, order); columns are reward functions.
    struct MatrixKey {
        std::string environment;
        int network_size;
        std::string agent_order;
        bool operator<(const MatrixKey& other) const {
            return std::tie(environment, network_size, agent_order) <
                   std::tie(other.environment, other.network_size, other.agent_order);
        }
    };
    std::map<MatrixKey, std::map<std::string, std::map<std::string, double>>> matrix;
    for (const auto& [key, data] : groups) {
        if (data.behaviour_runs == 0) continue;
        MatrixKey mkey{key.environment, key.network_size, key.agent_order};
        for (const auto& [counter, total] : data.behaviour_totals) {
            matrix[mkey][counter][key.reward] = total / data.behaviour_runs;
        }
    }
    std::ofstream out(path);
    out << "environment,network_size,agent_order,counter";
    for (const std::string& reward : kMatrixRewards) {
        out << ',' << reward;
    }
    out << '\n';
    for (const auto& [mkey, counters] : matrix) {
        for (const auto& [counter, by_reward] : counters) {
            out << mkey.environment << ',' << mkey.network_size << ',' << mkey.agent_order
                << ',' << counter;
            for (const std::string& reward : kMatrixRewards) {
                auto it = by_reward.find(reward);
                out << ',';
                if (it != by_reward.end()) {
                    out << fmt6(it->second);
                }
            }
            out << '\n';
        }
    }
}

}  // namespace

void cmd_sweep(const ExperimentConfig& base) {
    std::vector<int> sizes = base.sweep.sizes;
    std::vector<std::string> orders = base.sweep.orders;
    std::vector<std::string> rewards = base.sweep.rewards;
    if (sizes.empty()) sizes = {base.yt.node_count};
    if (orders.empty()) orders = {to_string(base.yt.agent_order)};
    if (rewards.empty()) rewards = {to_string(base.reward)};

    for (int size : sizes) {
        for (const std::string& order : orders) {
            for (const std::string& reward : rewards) {
                ExperimentConfig config = base;
                config.yt.node_count = size;
                config.yt.agent_order = agent_order_from_string(order);
                config.reward = reward_kind_from_string(reward);
                config.total_steps = base.total_steps;  // 0 keeps the per-size default
                const std::string combo = (config.environment == "YT"
                                               ? "yt_n" + std::to_string(size)
                                               : "cage") +
                                          "_" + order + "_" + reward;
                config.out_dir = (fs::path(base.out_dir) / combo).string();
                std::cerr << "sweep: training " << combo << '\n';
                cmd_train(config);
            }
        }
    }
}

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig c;
    if (name == "yt-n2-qtable-desk") {
        c.environment = "YT";
        c.yt.node_count = 2;
        c.yt.action_space = YtActionSpace::Basic;
        c.yt.agent_order = AgentOrder::RedThenBlue;
        c.reward = RewardKind::Sp;
        c.learner = "QTABLE";
        c.total_steps = 200'000;
        c.runs = 5;
        return c;
    }
    if (name == "yt-n5-ppo-desk") {
        c.environment = "YT";
        c.yt.node_count = 5;
        c.yt.action_space = YtActionSpace::Extended;
        c.yt.agent_order = AgentOrder::RedThenBlue;
        c.reward = RewardKind::Spn;
        c.learner = "PPO";
        c.total_steps = 300'000;
        c.runs = 3;
        return c;
    }
    if (name == "yt-n2-ppo-paper") {
        c.environment = "YT";
        c.yt.node_count = 2;
        c.yt.action_space = YtActionSpace::Basic;
        c.yt.agent_order = AgentOrder::RedThenBlue;
        c.reward = RewardKind::Sp;
        c.learner = "PPO";
        c.total_steps = 0;  // 500k by the per-size default
        c.runs = 25;
        return c;
    }
    if (name == "yt-n50-ppo-paper") {
        c.environment = "YT";
        c.yt.node_count = 50;
        c.yt.action_space = YtActionSpace::Extended;
        c.yt.agent_order = AgentOrder::RedThenBlue;
        c.reward = RewardKind::Spn;
        c.learner = "PPO";
        c.total_steps = 0;  // 2.5M
        c.runs = 25;
        return c;
    }
    if (name == "cage-ppo-paper") {
        c.environment = "CAGE";
        c.reward = RewardKind::Cdn;
        c.learner = "PPO";
        c.total_steps = 2'500'000;
        c.runs = 25;
        return c;
    }
    if (name == "cage-dqn-desk") {
        c.environment = "CAGE";
        c.reward = RewardKind::Cdn;
        c.learner = "DQN";
        c.total_steps = 100'000;
        c.runs = 3;
        c.eval_episodes = 200;
        return c;
    }
    throw ConfigError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"yt-n2-qtable-desk", "yt-n5-ppo-desk", "yt-n2-ppo-paper",
            "yt-n50-ppo-paper", "cage-ppo-paper", "cage-dqn-desk"};
}

}  // namespace acd
