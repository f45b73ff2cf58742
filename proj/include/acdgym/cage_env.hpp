#pragma once

#include <array>
#include <random>

#include "acdgym/env.hpp"

namespace acd {

// Fixed 13-host layout: hosts 0..4 are user hosts (entry host u0 = 0),
// 5..7 enterprise hosts (e0 = 5), 8 the defender host, 9..11 operational
// hosts, 12 the operational server.
inline constexpr int kUserHost0 = 0;
inline constexpr int kEnterpriseHost0 = 5;
inline constexpr int kDefenderHost = 8;
inline constexpr int kOpServer = 12;

HostRole cage_host_role(int host);
Subnet cage_host_subnet(int host);

enum class Activity { NoActivity, Scanned, Exploited };

struct Host {
    int id = 0;
    Subnet subnet = Subnet::User;
    HostRole role = HostRole::UserHost;
    RedAccess red_access = RedAccess::None;
    bool decoy_active = false;
    Activity activity_this_step = Activity::NoActivity;
};

struct BlueActionCage {
    enum class Kind { Sleep, Monitor, Analyse, Remove, Restore, Decoy };
    Kind kind = Kind::Sleep;
    int target = -1;

    static BlueActionCage sleep() { return {Kind::Sleep, -1}; }
    static BlueActionCage monitor() { return {Kind::Monitor, -1}; }
    static BlueActionCage analyse(int h) { return {Kind::Analyse, h}; }
    static BlueActionCage remove(int h) { return {Kind::Remove, h}; }
    static BlueActionCage restore(int h) { return {Kind::Restore, h}; }
    static BlueActionCage decoy(int h) { return {Kind::Decoy, h}; }
};

struct RedActionCage {
    enum class Kind { Exploit, PrivEsc, Impact };
    Kind kind = Kind::Exploit;
    int target = -1;
};

struct CageState {
    std::array<Host, kCageHostCount> hosts;
};

// Events emitted by one red sub-action.
struct RedEvents {
    bool impacted = false;
    int privesc_host = -1;  // host of a successful privilege escalation, or -1
    int touched_host = -1;  // host red acted on
    RedAccess level_after = RedAccess::None;
};

// Deterministic b-line chain derived from the current state: the attacker
// works u0 -> e0 -> operational server, resuming from the deepest host where
// access remains after a setback, and impacts every step once privileged on
// the operational server.
RedActionCage bline_next(const CageState& state);

RedEvents apply_red_cage(CageState& state, const RedActionCage& action);

// Sleep/Monitor: no state change. Analyse: handled by the environment's
// knowledge model. Remove clears user-level shells only; Restore clears any
// access; Decoy arms a persistent decoy on an uncompromised host.
void apply_blue_cage(CageState& state, const BlueActionCage& action);

struct CageConfig {
    int episode_length = 100;
    RewardSpec reward{RewardKind::Cdn, RewardEnv::Cage};
    std::uint64_t rng_seed = 0;
};

class CageEnv final : public Environment {
public:
    explicit CageEnv(const CageConfig& config);

    // Fixed red-then-blue order; a host counts as compromised when
    // red_access != None.
    StepRecord step(const BlueActionCage& blue);

    const CageState& state() const { return state_; }
    const CageConfig& config() const { return cfg_; }

    // Action index layout: 0 sleep, 1 monitor, 2..14 analyse(h),
    // 15..27 remove(h), 28..40 restore(h), 41..53 decoy(h).
    BlueActionCage decode_action(int index) const;

    int observation_size() const override { return 52; }
    int action_count() const override { return 2 + 4 * kCageHostCount; }
    int episode_length() const override { return cfg_.episode_length; }
    std::vector<double> reset() override;
    void reseed(std::uint64_t seed) override;
    StepRecord step_action(int action_index) override;
    StepRecord step_policy(const PolicyFn& policy) override;
    std::vector<double> observe() const override;
    bool done() const override { return done_; }
    std::vector<ActionTag> action_tags() const override;

private:
    // Blue's knowledge of a host's red access, shown in the access bits.
    enum class Knowledge { None, Unknown, User, Privileged };

    StepRecord step_impl(const std::function<BlueActionCage()>& blue_provider);
    int cage_compromised_count() const;
    bool red_confined_to_user_subnet() const;

    CageConfig cfg_;
    CageState state_;
    std::mt19937_64 rng_;  // reserved: the b-line attacker is deterministic
    int step_count_ = 0;
    bool done_ = false;
    std::array<bool, kCageHostCount> analysed_{};
    std::array<Knowledge, kCageHostCount> knowledge_{};
    bool monitored_this_step_ = false;
};

}  // namespace acd
