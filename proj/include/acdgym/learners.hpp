#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "acdgym/episode_scoring.hpp"
#include "acdgym/mlp.hpp"

namespace acd {

struct PpoConfig {
    double learning_rate = 3e-4;
    double gae_lambda = 0.95;
    double clip_range = 0.2;
    double gamma = 0.99;
    double value_coef = 0.5;
    int epochs = 10;
    int minibatch = 64;
    int horizon = 2048;
    int hidden_size = 64;  // two hidden layers of this width
};

struct DqnConfig {
    double learning_rate = 1e-4;
    int batch = 32;
    double gamma = 0.99;
    int train_frequency = 4;
    int buffer_capacity = 200000;
    double epsilon_initial = 1.0;
    double epsilon_final = 0.005;
    double exploration_fraction = 0.1;
    int target_refresh = 10000;
    int learning_starts = 100;
    int hidden_size = 64;
};

struct QTableConfig {
    double learning_rate = 0.1;
    double gamma = 0.99;
    double epsilon_initial = 1.0;
    double epsilon_final = 0.005;
    double exploration_fraction = 0.1;
};

// delta_t = r_t + gamma * V(s_{t+1}) * (1 - done_t) - V(s_t)
// A_t = delta_t + gamma * lambda * (1 - done_t) * A_{t+1}
// returns_t = A_t + V(s_t)
void gae_advantages(const std::vector<double>& rewards, const std::vector<double>& values,
                    const std::vector<std::uint8_t>& dones, double bootstrap_value,
                    double gamma, double lambda, std::vector<double>& advantages,
                    std::vector<double>& returns);

// Per-sample clipped surrogate: min(ratio * adv, clip(ratio, 1-c, 1+c) * adv).
double ppo_surrogate(double ratio, double advantage, double clip_range);

// y = r + gamma * (1 - done) * max_a Q_target(s', a)
std::vector<double> dqn_targets(const std::vector<double>& rewards,
                                const std::vector<std::uint8_t>& dones,
                                const std::vector<double>& max_next_q, double gamma);

// Linear decay from initial to final_eps over the first `fraction` of
// total_steps, then constant at exactly final_eps.
double epsilon_at(std::int64_t step, std::int64_t total_steps, double initial,
                  double final_eps, double fraction);

// Q(s,a) += lr * (r + gamma * (1 - done) * max_a' Q(s',a') - Q(s,a))
void q_learning_update(std::vector<std::vector<double>>& table, int state, int action,
                       double reward, int next_state, bool done, double learning_rate,
                       double gamma);

// Step-driven training interface shared by all learners. The trainer calls
// begin_step to obtain the (explorative) action and end_step with the
// transition outcome.
class Learner {
public:
    virtual ~Learner() = default;
    virtual int begin_step(const std::vector<double>& obs) = 0;
    virtual void end_step(double reward, const std::vector<double>& next_obs, bool done) = 0;

    // Deterministic snapshot of the current policy.
    virtual PolicyFn greedy_policy() const = 0;

    virtual nlohmann::json save_checkpoint() const = 0;
    virtual void load_checkpoint(const nlohmann::json& blob) = 0;
    virtual std::string name() const = 0;
};

// Tabular Q-learning over the YT compromise bitmask (node_count <= 10).
class QTableAgent final : public Learner {
public:
    QTableAgent(int node_count, int action_count, const QTableConfig& config,
                std::int64_t total_steps, std::uint64_t seed);

    int begin_step(const std::vector<double>& obs) override;
    void end_step(double reward, const std::vector<double>& next_obs, bool done) override;
    PolicyFn greedy_policy() const override;
    nlohmann::json save_checkpoint() const override;
    void load_checkpoint(const nlohmann::json& blob) override;
    std::string name() const override { return "QTABLE"; }

    const std::vector<std::vector<double>>& table() const { return table_; }
    double current_epsilon() const;

private:
    int state_key(const std::vector<double>& obs) const;

    int node_count_;
    int action_count_;
    QTableConfig cfg_;
    std::int64_t total_steps_;
    std::int64_t step_count_ = 0;
    std::vector<std::vector<double>> table_;
    std::mt19937_64 rng_;
    int pending_state_ = 0;
    int pending_action_ = 0;
};

class DqnAgent final : public Learner {
public:
    DqnAgent(int observation_size, int action_count, const DqnConfig& config,
             std::int64_t total_steps, std::uint64_t seed);

    int begin_step(const std::vector<double>& obs) override;
    void end_step(double reward, const std::vector<double>& next_obs, bool done) override;
    PolicyFn greedy_policy() const override;
    nlohmann::json save_checkpoint() const override;
    void load_checkpoint(const nlohmann::json& blob) override;
    std::string name() const override { return "DQN"; }

    double current_epsilon() const;
    const Mlp& q_network() const { return q_net_; }

private:
    struct Transition {
        std::vector<double> obs;
        int action = 0;
        double reward = 0.0;
        std::vector<double> next_obs;
        std::uint8_t done = 0;
    };

    void train_batch();

    DqnConfig cfg_;
    std::int64_t total_steps_;
    std::int64_t step_count_ = 0;
    Mlp q_net_;
    Mlp target_net_;
    AdamOptimizer adam_;
    std::vector<Transition> buffer_;
    std::size_t buffer_next_ = 0;
    std::mt19937_64 rng_;
    std::vector<double> pending_obs_;
    int pending_action_ = 0;
};

class PpoAgent final : public Learner {
public:
    PpoAgent(int observation_size, int action_count, const PpoConfig& config,
             std::uint64_t seed);

    int begin_step(const std::vector<double>& obs) override;
    void end_step(double reward, const std::vector<double>& next_obs, bool done) override;
    PolicyFn greedy_policy() const override;
    nlohmann::json save_checkpoint() const override;
    void load_checkpoint(const nlohmann::json& blob) override;
    std::string name() const override { return "PPO"; }

    // Action probabilities for the current policy (softmax over logits).
    std::vector<double> action_probabilities(const std::vector<double>& obs) const;
    int update_count() const { return update_count_; }

private:
    void update(const std::vector<double>& bootstrap_obs);

    PpoConfig cfg_;
    Mlp actor_;
    Mlp critic_;
    AdamOptimizer actor_adam_;
    AdamOptimizer critic_adam_;
    std::mt19937_64 rng_;
    int update_count_ = 0;

    // rollout buffer
    std::vector<std::vector<double>> obs_;
    std::vector<int> actions_;
    std::vector<double> logprobs_;
    std::vector<double> values_;
    std::vector<double> rewards_;
    std::vector<std::uint8_t> dones_;
};

}  // namespace acd
