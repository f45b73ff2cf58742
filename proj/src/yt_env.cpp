#include "acdgym/yt_env.hpp"

#include <algorithm>

#include "acdgym/rng.hpp"

namespace acd {

std::string to_string(YtActionSpace space) {
    return space == YtActionSpace::Basic ? "BASIC" : "EXTENDED";
}

std::string to_string(AgentOrder order) {
    switch (order) {
        case AgentOrder::RedThenBlue: return "RED_BLUE";
        case AgentOrder::BlueThenRed: return "BLUE_RED";
        case AgentOrder::Random: return "RANDOM";
    }
    return "?";
}

YtActionSpace yt_action_space_from_string(const std::string& name) {
    if (name == "BASIC") return YtActionSpace::Basic;
    if (name == "EXTENDED") return YtActionSpace::Extended;
    throw ConfigError("unknown action space: " + name);
}

AgentOrder agent_order_from_string(const std::string& name) {
    if (name == "RED_BLUE") return AgentOrder::RedThenBlue;
    if (name == "BLUE_RED") return AgentOrder::BlueThenRed;
    if (name == "RANDOM") return AgentOrder::Random;
    throw ConfigError("unknown agent order: " + name);
}

std::optional<NodeId> red_frontier(const NetworkState& state) {
    const int n = state.topology.node_count();
    for (NodeId i = 0; i < n; ++i) {
        if (state.statuses[i].compromised) continue;
        if (i == state.topology.entry_node()) return i;
        for (NodeId j = 0; j < n; ++j) {
            if (state.statuses[j].compromised && state.topology.adjacent(i, j)) {
                return i;
            }
        }
    }
    return std::nullopt;
}

RedActionYt red_target(const NetworkState& state, double attack_probability,
                       std::mt19937_64& rng) {
    const double roll = uniform01(rng);
    if (roll >= attack_probability) {
        return {RedActionYt::Kind::DoNothing, -1};
    }
    if (auto target = red_frontier(state)) {
        return {RedActionYt::Kind::BasicAttack, *target};
    }
    return {RedActionYt::Kind::DoNothing, -1};
}

void apply_red(NetworkState& state, const RedActionYt& action) {
    if (action.kind == RedActionYt::Kind::DoNothing) return;
    NodeStatus& status = state.statuses.at(action.target);
    if (status.decoy_active) {
        status.decoy_active = false;  // decoy absorbs the attack
        return;
    }
    status.compromised = true;
}

void apply_blue(NetworkState& state, const BlueActionYt& action, YtActionSpace space) {
    switch (action.kind) {
        case BlueActionYt::Kind::ScanNetwork:
            return;
        case BlueActionYt::Kind::RestoreNode: {
            if (action.target < 0 || action.target >= state.topology.node_count()) {
                throw InvalidActionError("restore target out of range: " +
                                         std::to_string(action.target));
            }
            state.statuses[action.target].compromised = false;
            return;
        }
        case BlueActionYt::Kind::PlaceDecoy: {
            if (space != YtActionSpace::Extended) {
                throw InvalidActionError("place_decoy requires the extended action space");
            }
            if (action.target < 0 || action.target >= state.topology.node_count()) {
                throw InvalidActionError("decoy target out of range: " +
                                         std::to_string(action.target));
            }
            NodeStatus& status = state.statuses[action.target];
            if (!status.compromised) {
                status.decoy_active = true;
            }
            return;
        }
    }
}

YtEnv::YtEnv(const YtConfig& config)
    : cfg_(config), state_(make_linear_topology(config.node_count)), rng_(config.rng_seed) {
    if (cfg_.episode_length < 1) {
        throw ConfigError("episode_length must be >= 1");
    }
    if (cfg_.red_attack_probability < 0.0 || cfg_.red_attack_probability > 1.0) {
        throw ConfigError("red_attack_probability must be in [0, 1]");
    }
    if (cfg_.reward.environment != RewardEnv::Yt) {
        throw ConfigError("YT environment requires a YT reward spec");
    }
    validate(cfg_.reward);
    reset();
}

std::vector<double> YtEnv::reset() {
    for (NodeStatus& s : state_.statuses) {
        s = NodeStatus{};
    }
    step_count_ = 0;
    done_ = false;
    if (cfg_.agent_order == AgentOrder::Random) {
        first_step_red_ = (rng_() & 1) != 0;  // one draw per episode
    }
    return observe();
}

void YtEnv::reseed(std::uint64_t seed) {
    rng_.seed(seed);
    reset();
}

bool YtEnv::red_goes_first(int step_index) const {
    switch (cfg_.agent_order) {
        case AgentOrder::RedThenBlue: return true;
        case AgentOrder::BlueThenRed: return false;
        case AgentOrder::Random: return ((step_index & 1) == 0) == first_step_red_;
    }
    return true;
}

StepRecord YtEnv::step(const BlueActionYt& blue) {
    return step_impl([&blue] { return blue; });
}

StepRecord YtEnv::step_policy(const PolicyFn& policy) {
    return step_impl([this, &policy] { return decode_action(policy(observe())); });
}

StepRecord YtEnv::step_impl(const std::function<BlueActionYt()>& blue_provider) {
    if (done_) {
        throw EpisodeFinishedError("step() called on a finished episode");
    }
    const bool red_first = red_goes_first(step_count_);

    StepRecord rec;
    rec.red_first = red_first;

    int m_intra = 0;
    RedActionYt red;
    BlueActionYt blue;
    auto red_turn = [&] {
        red = red_target(state_, cfg_.red_attack_probability, rng_);
        apply_red(state_, red);
        m_intra = std::max(m_intra, compromised_count(state_));
    };
    auto blue_turn = [&] {
        blue = blue_provider();
        apply_blue(state_, blue, cfg_.action_space);
        m_intra = std::max(m_intra, compromised_count(state_));
    };
    if (red_first) {
        red_turn();
        blue_turn();
    } else {
        blue_turn();
        red_turn();
    }

    rec.m_end = compromised_count(state_);
    rec.m_intra = m_intra;
    rec.score_gt = std::max(rec.m_intra, rec.m_end);

    // Decoys live for the current step only.
    for (NodeStatus& s : state_.statuses) {
        s.decoy_active = false;
    }

    TransitionSummary summary;
    summary.end_compromised_count = rec.m_end;
    summary.total_nodes = cfg_.node_count;
    switch (blue.kind) {
        case BlueActionYt::Kind::ScanNetwork: summary.blue_action = ActionTag::ScanNetwork; break;
        case BlueActionYt::Kind::RestoreNode: summary.blue_action = ActionTag::RestoreNode; break;
        case BlueActionYt::Kind::PlaceDecoy: summary.blue_action = ActionTag::PlaceDecoy; break;
    }
    rec.reward = reward_yt(cfg_.reward, summary);
    rec.blue_action = summary.blue_action;
    rec.blue_target = blue.target;
    rec.red_action.kind = red.kind == RedActionYt::Kind::BasicAttack ? RedMoveKind::BasicAttack
                                                                     : RedMoveKind::DoNothing;
    rec.red_action.target = red.target;

    ++step_count_;
    done_ = step_count_ >= cfg_.episode_length;
    rec.done = done_;
    rec.observation = observe();
    return rec;
}

BlueActionYt YtEnv::decode_action(int index) const {
    const int n = cfg_.node_count;
    if (index == 0) return BlueActionYt::scan();
    if (index >= 1 && index <= n) return BlueActionYt::restore(index - 1);
    if (cfg_.action_space == YtActionSpace::Extended && index > n && index <= 2 * n) {
        return BlueActionYt::place_decoy(index - n - 1);
    }
    throw InvalidActionError("action index out of range: " + std::to_string(index));
}

int YtEnv::observation_size() const {
    const int n = cfg_.node_count;
    return n * n + 2 * n;
}

int YtEnv::action_count() const {
    const int n = cfg_.node_count;
    return cfg_.action_space == YtActionSpace::Extended ? 1 + 2 * n : 1 + n;
}

StepRecord YtEnv::step_action(int action_index) {
    return step(decode_action(action_index));
}

std::vector<double> YtEnv::observe() const {
    std::vector<double> obs;
    obs.reserve(observation_size());
    for (std::uint8_t a : state_.topology.adjacency_flat()) {
        obs.push_back(static_cast<double>(a));
    }
    for (const NodeStatus& s : state_.statuses) {
        obs.push_back(s.vulnerability);
    }
    for (const NodeStatus& s : state_.statuses) {
        obs.push_back(s.compromised ? 1.0 : 0.0);
    }
    return obs;
}

std::vector<ActionTag> YtEnv::action_tags() const {
    if (cfg_.action_space == YtActionSpace::Extended) {
        return {ActionTag::ScanNetwork, ActionTag::RestoreNode, ActionTag::PlaceDecoy};
    }
    return {ActionTag::ScanNetwork, ActionTag::RestoreNode};
}

}  // namespace acd
