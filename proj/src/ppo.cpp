#include <algorithm>
#include <cmath>
#include <numeric>

#include "acdgym/learners.hpp"
#include "acdgym/rng.hpp"

namespace acd {

namespace {

std::vector<double> softmax(const std::vector<double>& logits) {
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    std::vector<double> probs(logits.size());
    double total = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        probs[i] = std::exp(logits[i] - max_logit);
        total += probs[i];
    }
    for (double& p : probs) p /= total;
    return probs;
}

int sample_categorical(const std::vector<double>& probs, std::mt19937_64& rng) {
    const double u = uniform01(rng);
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cumulative += probs[i];
        if (u < cumulative) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
}

}  // namespace

PpoAgent::PpoAgent(int observation_size, int action_count, const PpoConfig& config,
                   std::uint64_t seed)
    : cfg_(config),
      actor_({observation_size, config.hidden_size, config.hidden_size, action_count},
             Activation::Tanh, derive_seed(seed, 1), 0.01),
      critic_({observation_size, config.hidden_size, config.hidden_size, 1},
              Activation::Tanh, derive_seed(seed, 2), 1.0),
      actor_adam_(actor_.parameter_count(), config.learning_rate),
      critic_adam_(critic_.parameter_count(), config.learning_rate),
      rng_(derive_seed(seed, 3)) {
    if (cfg_.horizon < cfg_.minibatch) {
        throw ConfigError("PPO horizon must be >= minibatch size");
    }
    obs_.reserve(cfg_.horizon);
}

std::vector<double> PpoAgent::action_probabilities(const std::vector<double>& obs) const {
    return softmax(actor_.forward(obs));
}

int PpoAgent::begin_step(const std::vector<double>& obs) {
    if (static_cast<int>(obs_.size()) >= cfg_.horizon) {
        update(obs);
    }
    const std::vector<double> probs = softmax(actor_.forward(obs));
    const int action = sample_categorical(probs, rng_);
    obs_.push_back(obs);
    actions_.push_back(action);
    logprobs_.push_back(std::log(std::max(probs[action], 1e-12)));
    values_.push_back(critic_.forward(obs)[0]);
    return action;
}

void PpoAgent::end_step(double reward, const std::vector<double>& next_obs, bool done) {
    (void)next_obs;  // the bootstrap observation arrives via the next begin_step
    rewards_.push_back(reward);
    dones_.push_back(static_cast<std::uint8_t>(done ? 1 : 0));
}

void PpoAgent::update(const std::vector<double>& bootstrap_obs) {
    const int n = static_cast<int>(obs_.size());
    const double bootstrap_value =
        dones_.back() ? 0.0 : critic_.forward(bootstrap_obs)[0];
    std::vector<double> advantages;
    std::vector<double> returns;
    gae_advantages(rewards_, values_, dones_, bootstrap_value, cfg_.gamma, cfg_.gae_lambda,
                   advantages, returns);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::vector<double> actor_grad(actor_.parameter_count());
    std::vector<double> critic_grad(critic_.parameter_count());
    Mlp::Cache actor_cache;
    Mlp::Cache critic_cache;
    std::vector<double> dlogits(actor_.output_size());
    std::vector<double> dvalue(1);

    for (int epoch = 0; epoch < cfg_.epochs; ++epoch) {
        // Fisher-Yates with the agent's own generator for reproducibility.
        for (int i = n - 1; i > 0; --i) {
            std::swap(order[i], order[uniform_int(rng_, i + 1)]);
        }
        for (int start = 0; start < n; start += cfg_.minibatch) {
            const int end = std::min(start + cfg_.minibatch, n);
            const int batch = end - start;

            // Normalise advantages within the minibatch.
            double mean = 0.0;
            for (int k = start; k < end; ++k) mean += advantages[order[k]];
            mean /= batch;
            double var = 0.0;
            for (int k = start; k < end; ++k) {
                const double d = advantages[order[k]] - mean;
                var += d * d;
            }
            const double std_dev = std::sqrt(var / batch) + 1e-8;

            std::fill(actor_grad.begin(), actor_grad.end(), 0.0);
            std::fill(critic_grad.begin(), critic_grad.end(), 0.0);
            for (int k = start; k < end; ++k) {
                const int idx = order[k];
                const double adv = (advantages[idx] - mean) / std_dev;

                actor_.forward(obs_[idx], actor_cache);
                const std::vector<double>& logits = actor_cache.activations.back();
                const std::vector<double> probs = softmax(logits);
                const double logprob_new =
                    std::log(std::max(probs[actions_[idx]], 1e-12));
                const double ratio = std::exp(logprob_new - logprobs_[idx]);
                const double unclipped = ratio * adv;
                const double clipped =
                    std::clamp(ratio, 1.0 - cfg_.clip_range, 1.0 + cfg_.clip_range) * adv;
                // d(-min(u, c))/dlogprob: -ratio*adv on the unclipped branch,
                // zero once the clip saturates.
                const double coeff = unclipped <= clipped ? -ratio * adv / batch : 0.0;
                for (int a = 0; a < actor_.output_size(); ++a) {
                    const double indicator = a == actions_[idx] ? 1.0 : 0.0;
                    dlogits[a] = coeff * (indicator - probs[a]);
                }
                actor_.backward(actor_cache, dlogits, actor_grad);

                critic_.forward(obs_[idx], critic_cache);
                const double value = critic_cache.activations.back()[0];
                // value_coef * mean squared error to the GAE returns
                dvalue[0] = cfg_.value_coef * 2.0 * (value - returns[idx]) / batch;
                critic_.backward(critic_cache, dvalue, critic_grad);
            }
            actor_adam_.step(actor_.mutable_parameters(), actor_grad);
            critic_adam_.step(critic_.mutable_parameters(), critic_grad);
        }
    }

    obs_.clear();
    actions_.clear();
    logprobs_.clear();
    values_.clear();
    rewards_.clear();
    dones_.clear();
    ++update_count_;
}

PolicyFn PpoAgent::greedy_policy() const {
    auto net = std::make_shared<Mlp>(actor_);
    return [net](const std::vector<double>& obs) {
        const std::vector<double> logits = net->forward(obs);
        return static_cast<int>(
            std::max_element(logits.begin(), logits.end()) - logits.begin());
    };
}

nlohmann::json PpoAgent::save_checkpoint() const {
    return nlohmann::json{{"version", 1},
                          {"learner", "PPO"},
                          {"actor_layer_sizes", actor_.layer_sizes()},
                          {"critic_layer_sizes", critic_.layer_sizes()},
                          {"actor_parameters", actor_.parameters()},
                          {"critic_parameters", critic_.parameters()}};
}

void PpoAgent::load_checkpoint(const nlohmann::json& blob) {
    if (blob.value("learner", "") != "PPO") {
        throw ConfigError("checkpoint is not a PPO checkpoint");
    }
    if (blob.at("actor_layer_sizes").get<std::vector<int>>() != actor_.layer_sizes() ||
        blob.at("critic_layer_sizes").get<std::vector<int>>() != critic_.layer_sizes()) {
        throw ConfigError("PPO checkpoint layer sizes do not match the configuration");
    }
    actor_.set_parameters(blob.at("actor_parameters").get<std::vector<double>>());
    critic_.set_parameters(blob.at("critic_parameters").get<std::vector<double>>());
}

}  // namespace acd
