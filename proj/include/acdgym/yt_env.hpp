#pragma once

#include <optional>
#include <random>

#include "acdgym/env.hpp"
#include "acdgym/net_model.hpp"

namespace acd {

enum class YtActionSpace { Basic, Extended };
enum class AgentOrder { RedThenBlue, BlueThenRed, Random };

std::string to_string(YtActionSpace space);
std::string to_string(AgentOrder order);
YtActionSpace yt_action_space_from_string(const std::string& name);
AgentOrder agent_order_from_string(const std::string& name);

struct YtConfig {
    int node_count = 5;
    YtActionSpace action_space = YtActionSpace::Basic;
    AgentOrder agent_order = AgentOrder::RedThenBlue;
    int episode_length = 100;
    double red_attack_probability = 0.9;
    RewardSpec reward{RewardKind::Sp, RewardEnv::Yt};
    std::uint64_t rng_seed = 0;
};

struct BlueActionYt {
    enum class Kind { ScanNetwork, RestoreNode, PlaceDecoy };
    Kind kind = Kind::ScanNetwork;
    NodeId target = -1;

    static BlueActionYt scan() { return {Kind::ScanNetwork, -1}; }
    static BlueActionYt restore(NodeId t) { return {Kind::RestoreNode, t}; }
    static BlueActionYt place_decoy(NodeId t) { return {Kind::PlaceDecoy, t}; }
};

struct RedActionYt {
    enum class Kind { DoNothing, BasicAttack };
    Kind kind = Kind::DoNothing;
    NodeId target = -1;
};

// Red's lateral-movement frontier: the lowest-index uncompromised node that is
// the entry node or adjacent to a compromised node. nullopt when every node is
// compromised.
std::optional<NodeId> red_frontier(const NetworkState& state);

// Rolls the attack probability (exactly one rng draw) and targets the frontier.
RedActionYt red_target(const NetworkState& state, double attack_probability,
                       std::mt19937_64& rng);

// BasicAttack on a decoyed node is absorbed: the decoy is cleared and the node
// stays clean. Otherwise the attack always succeeds.
void apply_red(NetworkState& state, const RedActionYt& action);

// ScanNetwork: no-op. RestoreNode: clears the compromised flag. PlaceDecoy:
// arms a decoy on a clean node (no-op on a compromised one); only legal in the
// extended action space.
void apply_blue(NetworkState& state, const BlueActionYt& action, YtActionSpace space);

class YtEnv final : public Environment {
public:
    explicit YtEnv(const YtConfig& config);

    // Typed step: runs the red and blue sub-actions in the configured order,
    // samples the compromised count after each, clears decoys at step end.
    StepRecord step(const BlueActionYt& blue);

    const NetworkState& state() const { return state_; }
    const YtConfig& config() const { return cfg_; }

    // Action index layout: 0 = scan, 1..n = restore(i-1), and in the extended
    // space n+1..2n = place_decoy(i-n-1).
    BlueActionYt decode_action(int index) const;

    int observation_size() const override;  // n^2 + 2n
    int action_count() const override;
    int episode_length() const override { return cfg_.episode_length; }
    std::vector<double> reset() override;
    void reseed(std::uint64_t seed) override;
    StepRecord step_action(int action_index) override;
    StepRecord step_policy(const PolicyFn& policy) override;
    std::vector<double> observe() const override;
    bool done() const override { return done_; }
    std::vector<ActionTag> action_tags() const override;

private:
    StepRecord step_impl(const std::function<BlueActionYt()>& blue_provider);
    bool red_goes_first(int step_index) const;

    YtConfig cfg_;
    NetworkState state_;
    std::mt19937_64 rng_;
    int step_count_ = 0;
    bool done_ = false;
    bool first_step_red_ = true;  // Random order: drawn at reset
};

}  // namespace acd
