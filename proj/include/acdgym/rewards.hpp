#pragma once

#include <array>
#include <string>

#include "acdgym/errors.hpp"

namespace acd {

enum class RewardKind { Sp, Sn, Spn, Dn, Cdn, AblatedSp };
enum class RewardEnv { Yt, Cage };

// Config-file names: "SP", "SN", "SPN", "DN", "CDN", "ABLATED_SP".
RewardKind reward_kind_from_string(const std::string& name);
std::string to_string(RewardKind kind);
std::string to_string(RewardEnv env);

struct RewardSpec {
    RewardKind kind = RewardKind::Sp;
    RewardEnv environment = RewardEnv::Yt;
};

// Throws ConfigError for unsupported kind/environment combinations
// (DN and ABLATED_SP exist only for the YT environment).
void validate(const RewardSpec& spec);

// Blue action tags across both environments; used for reward action
// penalties and behavioural counters.
enum class ActionTag {
    ScanNetwork,
    RestoreNode,
    PlaceDecoy,
    Sleep,
    Monitor,
    Analyse,
    Remove,
    Restore,
    Decoy,
};
std::string to_string(ActionTag tag);

enum class RedAccess { None, UserLevel, Privileged };
enum class HostRole { UserHost, EnterpriseHost, DefenderHost, OpHost, OpServer };
enum class Subnet { User, Enterprise, Operational };

inline constexpr int kCageHostCount = 13;

struct CageSummary {
    std::array<RedAccess, kCageHostCount> access{};
    std::array<HostRole, kCageHostCount> roles{};
    bool impacted_this_step = false;
    bool red_confined_to_user_subnet = false;
};

// Everything the per-step reward functions condition on.
struct TransitionSummary {
    int end_compromised_count = 0;
    int total_nodes = 0;
    ActionTag blue_action = ActionTag::ScanNetwork;
    CageSummary cage;  // only meaningful for CAGE specs
};

double reward_yt(const RewardSpec& spec, const TransitionSummary& summary);
double reward_cage(const RewardSpec& spec, const TransitionSummary& summary);

// Dispatches on spec.environment.
double reward(const RewardSpec& spec, const TransitionSummary& summary);

}  // namespace acd
