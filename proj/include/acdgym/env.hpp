#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "acdgym/rewards.hpp"

namespace acd {

// Maps an observation to a discrete action index.
using PolicyFn = std::function<int(const std::vector<double>&)>;

enum class RedMoveKind {
    DoNothing,
    BasicAttack,  // YT
    Exploit,      // CAGE
    PrivEsc,      // CAGE
    Impact,       // CAGE
};

struct RedMove {
    RedMoveKind kind = RedMoveKind::DoNothing;
    int target = -1;
};

// One environment step's ground-truth instrumentation and outcome.
//
// The compromised-node count is sampled after every red/blue sub-action;
// m_intra is the maximum of those samples, m_end the count after the final
// sub-action, and score_gt = max(m_intra, m_end).
struct StepRecord {
    int m_intra = 0;
    int m_end = 0;
    int score_gt = 0;
    double reward = 0.0;
    ActionTag blue_action = ActionTag::ScanNetwork;
    int blue_target = -1;  // -1 for untargeted actions
    RedMove red_action;
    std::vector<double> observation;  // end-of-step observation
    bool done = false;
    bool red_first = false;  // sub-action order used this step

    // CAGE-only event fields.
    bool impacted = false;     // successful operational-server impact this step
    int privesc_host = -1;     // host of a successful privilege escalation, or -1
    HostRole privesc_role = HostRole::UserHost;
};

// Discrete-action episodic environment surface shared by both gyms and
// consumed by the learners and the rollout machinery. One instance is
// single-threaded; instances are independent.
class Environment {
public:
    virtual ~Environment() = default;

    virtual int observation_size() const = 0;
    virtual int action_count() const = 0;
    virtual int episode_length() const = 0;

    // Starts a new episode and returns the initial observation.
    virtual std::vector<double> reset() = 0;

    // Reseeds the internal generator and resets the episode.
    virtual void reseed(std::uint64_t seed) = 0;

    virtual StepRecord step_action(int action_index) = 0;

    // Consults the policy at blue's sub-action time with the observation at
    // that moment. Scripted oracle policies use this entry point: with red
    // moving first, reacting to red's fresh move is what makes the analytic
    // optima attainable. Trained agents use step_action with the step-start
    // observation, the interface they were trained on.
    virtual StepRecord step_policy(const PolicyFn& policy) = 0;

    virtual std::vector<double> observe() const = 0;
    virtual bool done() const = 0;

    // Distinct blue action tags in CSV column order.
    virtual std::vector<ActionTag> action_tags() const = 0;
};

}  // namespace acd
