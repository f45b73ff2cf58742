#include <algorithm>

#include "acdgym/learners.hpp"
#include "acdgym/rng.hpp"

namespace acd {

void gae_advantages(const std::vector<double>& rewards, const std::vector<double>& values,
                    const std::vector<std::uint8_t>& dones, double bootstrap_value,
                    double gamma, double lambda, std::vector<double>& advantages,
                    std::vector<double>& returns) {
    const std::size_t n = rewards.size();
    if (values.size() != n || dones.size() != n) {
        throw ConfigError("gae_advantages input length mismatch");
    }
    advantages.assign(n, 0.0);
    returns.assign(n, 0.0);
    double next_advantage = 0.0;
    double next_value = bootstrap_value;
    for (std::size_t i = n; i-- > 0;) {
        const double not_done = dones[i] ? 0.0 : 1.0;
        const double delta = rewards[i] + gamma * next_value * not_done - values[i];
        next_advantage = delta + gamma * lambda * not_done * next_advantage;
        advantages[i] = next_advantage;
        returns[i] = next_advantage + values[i];
        next_value = values[i];
    }
}

double ppo_surrogate(double ratio, double advantage, double clip_range) {
    const double clipped = std::clamp(ratio, 1.0 - clip_range, 1.0 + clip_range);
    return std::min(ratio * advantage, clipped * advantage);
}

std::vector<double> dqn_targets(const std::vector<double>& rewards,
                                const std::vector<std::uint8_t>& dones,
                                const std::vector<double>& max_next_q, double gamma) {
    const std::size_t n = rewards.size();
    if (dones.size() != n || max_next_q.size() != n) {
        throw ConfigError("dqn_targets input length mismatch");
    }
    std::vector<double> targets(n);
    for (std::size_t i = 0; i < n; ++i) {
        targets[i] = rewards[i] + gamma * (dones[i] ? 0.0 : 1.0) * max_next_q[i];
    }
    return targets;
}

double epsilon_at(std::int64_t step, std::int64_t total_steps, double initial,
                  double final_eps, double fraction) {
    const double decay_steps = fraction * static_cast<double>(total_steps);
    if (decay_steps <= 0.0 || step >= decay_steps) return final_eps;
    const double progress = static_cast<double>(step) / decay_steps;
    return initial + progress * (final_eps - initial);
}

void q_learning_update(std::vector<std::vector<double>>& table, int state, int action,
                       double reward, int next_state, bool done, double learning_rate,
                       double gamma) {
    const double next_max =
        done ? 0.0 : *std::max_element(table[next_state].begin(), table[next_state].end());
    double& q = table[state][action];
    q += learning_rate * (reward + gamma * next_max - q);
}

QTableAgent::QTableAgent(int node_count, int action_count, const QTableConfig& config,
                         std::int64_t total_steps, std::uint64_t seed)
    : node_count_(node_count),
      action_count_(action_count),
      cfg_(config),
      total_steps_(total_steps),
      rng_(seed) {
    if (node_count < 1 || node_count > 10) {
        throw ConfigError("QTABLE supports YT networks with 1..10 nodes");
    }
    table_.assign(std::size_t{1} << node_count, std::vector<double>(action_count, 0.0));
}

int QTableAgent::state_key(const std::vector<double>& obs) const {
    // Compromise bits are the final node_count entries of the YT observation.
    const std::size_t offset = obs.size() - static_cast<std::size_t>(node_count_);
    int key = 0;
    for (int i = 0; i < node_count_; ++i) {
        if (obs[offset + i] != 0.0) key |= 1 << i;
    }
    return key;
}

double QTableAgent::current_epsilon() const {
    return epsilon_at(step_count_, total_steps_, cfg_.epsilon_initial, cfg_.epsilon_final,
                      cfg_.exploration_fraction);
}

int QTableAgent::begin_step(const std::vector<double>& obs) {
    pending_state_ = state_key(obs);
    if (uniform01(rng_) < current_epsilon()) {
        pending_action_ = uniform_int(rng_, action_count_);
    } else {
        const std::vector<double>& row = table_[pending_state_];
        pending_action_ = static_cast<int>(
            std::max_element(row.begin(), row.end()) - row.begin());
    }
    return pending_action_;
}

void QTableAgent::end_step(double reward, const std::vector<double>& next_obs, bool done) {
    q_learning_update(table_, pending_state_, pending_action_, reward, state_key(next_obs),
                      done, cfg_.learning_rate, cfg_.gamma);
    ++step_count_;
}

PolicyFn QTableAgent::greedy_policy() const {
    auto table = std::make_shared<std::vector<std::vector<double>>>(table_);
    const int node_count = node_count_;
    return [table, node_count](const std::vector<double>& obs) {
        const std::size_t offset = obs.size() - static_cast<std::size_t>(node_count);
        int key = 0;
        for (int i = 0; i < node_count; ++i) {
            if (obs[offset + i] != 0.0) key |= 1 << i;
        }
        const std::vector<double>& row = (*table)[key];
        return static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
    };
}

nlohmann::json QTableAgent::save_checkpoint() const {
    return nlohmann::json{{"version", 1},
                          {"learner", "QTABLE"},
                          {"node_count", node_count_},
                          {"action_count", action_count_},
                          {"table", table_}};
}

void QTableAgent::load_checkpoint(const nlohmann::json& blob) {
    if (blob.value("learner", "") != "QTABLE") {
        throw ConfigError("checkpoint is not a QTABLE checkpoint");
    }
    node_count_ = blob.at("node_count").get<int>();
    action_count_ = blob.at("action_count").get<int>();
    table_ = blob.at("table").get<std::vector<std::vector<double>>>();
}

}  // namespace acd
