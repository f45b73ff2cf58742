#include "acdgym/rewards.hpp"

namespace acd {

RewardKind reward_kind_from_string(const std::string& name) {
    if (name == "SP") return RewardKind::Sp;
    if (name == "SN") return RewardKind::Sn;
    if (name == "SPN") return RewardKind::Spn;
    if (name == "DN") return RewardKind::Dn;
    if (name == "CDN") return RewardKind::Cdn;
    if (name == "ABLATED_SP") return RewardKind::AblatedSp;
    throw ConfigError("unknown reward kind: " + name);
}

std::string to_string(RewardKind kind) {
    switch (kind) {
        case RewardKind::Sp: return "SP";
        case RewardKind::Sn: return "SN";
        case RewardKind::Spn: return "SPN";
        case RewardKind::Dn: return "DN";
        case RewardKind::Cdn: return "CDN";
        case RewardKind::AblatedSp: return "ABLATED_SP";
    }
    return "?";
}

std::string to_string(RewardEnv env) {
    return env == RewardEnv::Yt ? "YT" : "CAGE";
}

std::string to_string(ActionTag tag) {
    switch (tag) {
        case ActionTag::ScanNetwork: return "scan_network";
        case ActionTag::RestoreNode: return "restore_node";
        case ActionTag::PlaceDecoy: return "place_decoy";
        case ActionTag::Sleep: return "sleep";
        case ActionTag::Monitor: return "monitor";
        case ActionTag::Analyse: return "analyse";
        case ActionTag::Remove: return "remove";
        case ActionTag::Restore: return "restore";
        case ActionTag::Decoy: return "decoy";
    }
    return "?";
}

void validate(const RewardSpec& spec) {
    if (spec.environment == RewardEnv::Cage &&
        (spec.kind == RewardKind::Dn || spec.kind == RewardKind::AblatedSp)) {
        throw ConfigError(to_string(spec.kind) + " is not defined for the CAGE environment");
    }
}

namespace {

double sparse_positive_yt(const TransitionSummary& s) {
    return s.end_compromised_count == 0 ? 1.0 : 0.0;
}

double sparse_negative_yt(const TransitionSummary& s) {
    return s.end_compromised_count == s.total_nodes ? -1.0 : 0.0;
}

double cdn_action_penalty_yt(ActionTag tag) {
    switch (tag) {
        case ActionTag::RestoreNode: return -0.5;
        case ActionTag::PlaceDecoy: return -0.25;
        default: return 0.0;  // scan carries no penalty
    }
}

double sparse_positive_cage(const TransitionSummary& s) {
    return s.cage.red_confined_to_user_subnet ? 1.0 : 0.0;
}

double sparse_negative_cage(const TransitionSummary& s) {
    return s.cage.impacted_this_step ? -1.0 : 0.0;
}

double privileged_host_penalty(HostRole role) {
    switch (role) {
        case HostRole::UserHost: return -0.1;
        case HostRole::OpHost: return -0.1;
        case HostRole::EnterpriseHost: return -1.0;
        case HostRole::DefenderHost: return -1.0;  // unreachable: defender is never compromised
        case HostRole::OpServer: return -1.0;
    }
    return 0.0;
}

}  // namespace

double reward_yt(const RewardSpec& spec, const TransitionSummary& s) {
    if (spec.environment != RewardEnv::Yt) {
        throw ConfigError("reward_yt called with a non-YT reward spec");
    }
    switch (spec.kind) {
        case RewardKind::Sp:
            return sparse_positive_yt(s);
        case RewardKind::Sn:
            return sparse_negative_yt(s);
        case RewardKind::Spn:
            return sparse_positive_yt(s) + sparse_negative_yt(s);
        case RewardKind::Dn:
            return -static_cast<double>(s.end_compromised_count);
        case RewardKind::Cdn:
            return -static_cast<double>(s.end_compromised_count) +
                   cdn_action_penalty_yt(s.blue_action);
        case RewardKind::AblatedSp:
            return sparse_positive_yt(s) - 1.0;
    }
    throw ConfigError("unhandled reward kind");
}

double reward_cage(const RewardSpec& spec, const TransitionSummary& s) {
    if (spec.environment != RewardEnv::Cage) {
        throw ConfigError("reward_cage called with a non-CAGE reward spec");
    }
    validate(spec);
    switch (spec.kind) {
        case RewardKind::Sp:
            return sparse_positive_cage(s);
        case RewardKind::Sn:
            return sparse_negative_cage(s);
        case RewardKind::Spn:
            return sparse_positive_cage(s) + sparse_negative_cage(s);
        case RewardKind::Cdn: {
            double total = 0.0;
            for (int h = 0; h < kCageHostCount; ++h) {
                if (s.cage.access[h] == RedAccess::Privileged) {
                    total += privileged_host_penalty(s.cage.roles[h]);
                }
            }
            if (s.cage.impacted_this_step) total += -10.0;
            if (s.blue_action == ActionTag::Restore) total += -1.0;
            return total;
        }
        default:
            throw ConfigError(to_string(spec.kind) + " is not defined for the CAGE environment");
    }
}

double reward(const RewardSpec& spec, const TransitionSummary& summary) {
    return spec.environment == RewardEnv::Yt ? reward_yt(spec, summary)
                                             : reward_cage(spec, summary);
}

}  // namespace acd
