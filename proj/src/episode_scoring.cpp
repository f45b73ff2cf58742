#include "acdgym/episode_scoring.hpp"

#include <fstream>
#include <numeric>

#include "acdgym/csv.hpp"

namespace acd {

double EpisodeRecord::mean_score() const {
    if (per_step_scores.empty()) return 0.0;
    const double total = std::accumulate(per_step_scores.begin(), per_step_scores.end(), 0.0);
    return total / static_cast<double>(per_step_scores.size());
}

int EpisodeRecord::total_blue_actions() const {
    int total = 0;
    for (const auto& [tag, count] : blue_action_counts) total += count;
    return total;
}

void record_step(EpisodeRecord& rec, const StepRecord& step) {
    rec.per_step_scores.push_back(step.score_gt);
    rec.episodic_reward += step.reward;
    ++rec.blue_action_counts[step.blue_action];
    if (step.impacted) {
        ++rec.impact_count;
        if (rec.first_impact_step < 0) {
            rec.first_impact_step = static_cast<int>(rec.per_step_scores.size());
        }
    }
    if (step.privesc_host >= 0) {
        switch (step.privesc_role) {
            case HostRole::UserHost: ++rec.privesc_user_hosts; break;
            case HostRole::EnterpriseHost: ++rec.privesc_enterprise_hosts; break;
            case HostRole::OpServer: ++rec.privesc_op_server; break;
            default: break;
        }
    }
}

RolloutResult rollout(Environment& env, const PolicyFn& policy, int episodes,
                      std::uint64_t base_seed, PolicyTiming timing) {
    RolloutResult result;
    result.episodes.reserve(episodes);
    for (int ep = 0; ep < episodes; ++ep) {
        env.reseed(base_seed + static_cast<std::uint64_t>(ep));
        std::vector<double> obs = env.observe();
        EpisodeRecord rec;
        while (!env.done()) {
            const StepRecord step = timing == PolicyTiming::BlueTurn
                                        ? env.step_policy(policy)
                                        : env.step_action(policy(obs));
            record_step(rec, step);
            obs = step.observation;
        }
        result.distribution.values.push_back(rec.mean_score());
        result.episodes.push_back(std::move(rec));
    }

    BehaviourReport& rep = result.behaviour;
    rep.episodes = episodes;
    for (ActionTag tag : env.action_tags()) {
        rep.mean_action_counts[tag] = 0.0;
    }
    for (const EpisodeRecord& rec : result.episodes) {
        rep.mean_score_gt += rec.mean_score();
        rep.mean_episodic_reward += rec.episodic_reward;
        for (const auto& [tag, count] : rec.blue_action_counts) {
            rep.mean_action_counts[tag] += count;
        }
        rep.mean_impact_count += rec.impact_count;
        rep.mean_privesc_user_hosts += rec.privesc_user_hosts;
        rep.mean_privesc_enterprise_hosts += rec.privesc_enterprise_hosts;
        rep.mean_privesc_op_server += rec.privesc_op_server;
    }
    if (episodes > 0) {
        const double inv = 1.0 / episodes;
        rep.mean_score_gt *= inv;
        rep.mean_episodic_reward *= inv;
        for (auto& [tag, value] : rep.mean_action_counts) value *= inv;
        rep.mean_impact_count *= inv;
        rep.mean_privesc_user_hosts *= inv;
        rep.mean_privesc_enterprise_hosts *= inv;
        rep.mean_privesc_op_server *= inv;
    }
    return result;
}

void write_evaluation_csv(const std::string& path, const RolloutResult& result,
                          const std::vector<ActionTag>& columns) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write CSV file: " + path);
    }
    out << "episode_index,mean_score_gt,episodic_reward";
    for (ActionTag tag : columns) {
        out << ',' << to_string(tag);
    }
    out << '\n';
    for (std::size_t i = 0; i < result.episodes.size(); ++i) {
        const EpisodeRecord& rec = result.episodes[i];
        out << i << ',' << fmt6(rec.mean_score()) << ',' << fmt6(rec.episodic_reward);
        for (ActionTag tag : columns) {
            auto it = rec.blue_action_counts.find(tag);
            out << ',' << (it == rec.blue_action_counts.end() ? 0 : it->second);
        }
        out << '\n';
    }
}

void write_behaviour_csv(const std::string& path, const BehaviourReport& report,
                         const std::vector<ActionTag>& columns) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write CSV file: " + path);
    }
    out << "counter,value\n";
    out << "episodes," << fmt6(report.episodes) << '\n';
    out << "mean_score_gt," << fmt6(report.mean_score_gt) << '\n';
    out << "mean_episodic_reward," << fmt6(report.mean_episodic_reward) << '\n';
    for (ActionTag tag : columns) {
        auto it = report.mean_action_counts.find(tag);
        out << to_string(tag) << ',' << fmt6(it == report.mean_action_counts.end() ? 0.0 : it->second)
            << '\n';
    }
    out << "impact_count," << fmt6(report.mean_impact_count) << '\n';
    out << "privesc_user_hosts," << fmt6(report.mean_privesc_user_hosts) << '\n';
    out << "privesc_enterprise_hosts," << fmt6(report.mean_privesc_enterprise_hosts) << '\n';
    out << "privesc_op_server," << fmt6(report.mean_privesc_op_server) << '\n';
}

}  // namespace acd
