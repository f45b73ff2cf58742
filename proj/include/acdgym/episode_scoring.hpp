#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "acdgym/env.hpp"

namespace acd {

// Ground-truth accumulation for one episode, independent of training reward.
struct EpisodeRecord {
    std::vector<int> per_step_scores;
    double episodic_reward = 0.0;
    std::map<ActionTag, int> blue_action_counts;

    // CAGE counters.
    int impact_count = 0;
    int privesc_user_hosts = 0;
    int privesc_enterprise_hosts = 0;
    int privesc_op_server = 0;
    int first_impact_step = -1;  // 1-based, -1 when never impacted

    double mean_score() const;
    int total_blue_actions() const;
};

void record_step(EpisodeRecord& rec, const StepRecord& step);

// The set X of per-episode mean scores from which VaR/CVaR/RF/CI are computed.
struct EvalDistribution {
    std::vector<double> values;
};

// Per-episode means of the behavioural counters, Appendix-style.
struct BehaviourReport {
    int episodes = 0;
    double mean_score_gt = 0.0;
    double mean_episodic_reward = 0.0;
    std::map<ActionTag, double> mean_action_counts;
    double mean_impact_count = 0.0;
    double mean_privesc_user_hosts = 0.0;
    double mean_privesc_enterprise_hosts = 0.0;
    double mean_privesc_op_server = 0.0;
};

struct RolloutResult {
    EvalDistribution distribution;
    BehaviourReport behaviour;
    std::vector<EpisodeRecord> episodes;
};

// StepStart: the policy decides from the previous step's observation (the
// interface trained agents learned on). BlueTurn: the policy is consulted at
// blue's sub-action time (scripted oracle semantics).
enum class PolicyTiming { StepStart, BlueTurn };

// Runs fixed-policy episodes, reseeding the environment with
// base_seed + episode_index so episodes are independent and the rollout can
// be reproduced or parallelised without changing results.
RolloutResult rollout(Environment& env, const PolicyFn& policy, int episodes,
                      std::uint64_t base_seed,
                      PolicyTiming timing = PolicyTiming::StepStart);

// Per-episode rows: episode_index, mean_score_gt, episodic_reward, then one
// column per action tag.
void write_evaluation_csv(const std::string& path, const RolloutResult& result,
                          const std::vector<ActionTag>& columns);

// counter,value rows with the behavioural means.
void write_behaviour_csv(const std::string& path, const BehaviourReport& report,
                         const std::vector<ActionTag>& columns);

}  // namespace acd
