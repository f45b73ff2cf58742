#include <algorithm>

#include "acdgym/learners.hpp"
#include "acdgym/rng.hpp"

namespace acd {

DqnAgent::DqnAgent(int observation_size, int action_count, const DqnConfig& config,
                   std::int64_t total_steps, std::uint64_t seed)
    : cfg_(config),
      total_steps_(total_steps),
      q_net_({observation_size, config.hidden_size, config.hidden_size, action_count},
             Activation::Relu, derive_seed(seed, 1)),
      target_net_(q_net_),
      adam_(q_net_.parameter_count(), config.learning_rate),
      rng_(derive_seed(seed, 2)) {
    if (cfg_.buffer_capacity < cfg_.batch) {
        throw ConfigError("DQN buffer capacity must be >= batch size");
    }
    buffer_.reserve(cfg_.buffer_capacity);
}

double DqnAgent::current_epsilon() const {
    return epsilon_at(step_count_, total_steps_, cfg_.epsilon_initial, cfg_.epsilon_final,
                      cfg_.exploration_fraction);
}

int DqnAgent::begin_step(const std::vector<double>& obs) {
    pending_obs_ = obs;
    if (uniform01(rng_) < current_epsilon()) {
        pending_action_ = uniform_int(rng_, q_net_.output_size());
    } else {
        const std::vector<double> q = q_net_.forward(obs);
        pending_action_ = static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
    }
    return pending_action_;
}

void DqnAgent::end_step(double reward, const std::vector<double>& next_obs, bool done) {
    Transition t{std::move(pending_obs_), pending_action_, reward, next_obs,
                 static_cast<std::uint8_t>(done ? 1 : 0)};
    if (buffer_.size() < static_cast<std::size_t>(cfg_.buffer_capacity)) {
        buffer_.push_back(std::move(t));
    } else {
        buffer_[buffer_next_] = std::move(t);
    }
    buffer_next_ = (buffer_next_ + 1) % cfg_.buffer_capacity;

    ++step_count_;
    if (step_count_ > cfg_.learning_starts &&
        buffer_.size() >= static_cast<std::size_t>(cfg_.batch) &&
        step_count_ % cfg_.train_frequency == 0) {
        train_batch();
    }
    if (step_count_ % cfg_.target_refresh == 0) {
        target_net_.set_parameters(q_net_.parameters());
    }
}

void DqnAgent::train_batch() {
    const int batch = cfg_.batch;
    std::vector<double> rewards(batch);
    std::vector<std::uint8_t> dones(batch);
    std::vector<double> max_next(batch);
    std::vector<const Transition*> samples(batch);
    for (int i = 0; i < batch; ++i) {
        samples[i] = &buffer_[uniform_int(rng_, static_cast<int>(buffer_.size()))];
        rewards[i] = samples[i]->reward;
        dones[i] = samples[i]->done;
        const std::vector<double> q_next = target_net_.forward(samples[i]->next_obs);
        max_next[i] = *std::max_element(q_next.begin(), q_next.end());
    }
    const std::vector<double> targets = dqn_targets(rewards, dones, max_next, cfg_.gamma);

    std::vector<double> grad(q_net_.parameter_count(), 0.0);
    Mlp::Cache cache;
    std::vector<double> dout(q_net_.output_size());
    for (int i = 0; i < batch; ++i) {
        q_net_.forward(samples[i]->obs, cache);
        const double q_taken = cache.activations.back()[samples[i]->action];
        std::fill(dout.begin(), dout.end(), 0.0);
        // squared-error loss: mean over the batch of (Q(s,a) - y)^2
        dout[samples[i]->action] = 2.0 * (q_taken - targets[i]) / batch;
        q_net_.backward(cache, dout, grad);
    }
    adam_.step(q_net_.mutable_parameters(), grad);
}

PolicyFn DqnAgent::greedy_policy() const {
    auto net = std::make_shared<Mlp>(q_net_);
    return [net](const std::vector<double>& obs) {
        const std::vector<double> q = net->forward(obs);
        return static_cast<int>(std::max_element(q.begin(), q.end()) - q.begin());
    };
}

nlohmann::json DqnAgent::save_checkpoint() const {
    return nlohmann::json{{"version", 1},
                          {"learner", "DQN"},
                          {"layer_sizes", q_net_.layer_sizes()},
                          {"parameters", q_net_.parameters()}};
}

void DqnAgent::load_checkpoint(const nlohmann::json& blob) {
    if (blob.value("learner", "") != "DQN") {
        throw ConfigError("checkpoint is not a DQN checkpoint");
    }
    if (blob.at("layer_sizes").get<std::vector<int>>() != q_net_.layer_sizes()) {
        throw ConfigError("DQN checkpoint layer sizes do not match the configuration");
    }
    q_net_.set_parameters(blob.at("parameters").get<std::vector<double>>());
    target_net_.set_parameters(q_net_.parameters());
}

}  // namespace acd
