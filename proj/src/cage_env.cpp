#include "acdgym/cage_env.hpp"

#include <algorithm>

namespace acd {

HostRole cage_host_role(int host) {
    if (host >= 0 && host <= 4) return HostRole::UserHost;
    if (host >= 5 && host <= 7) return HostRole::EnterpriseHost;
    if (host == kDefenderHost) return HostRole::DefenderHost;
    if (host >= 9 && host <= 11) return HostRole::OpHost;
    if (host == kOpServer) return HostRole::OpServer;
    throw InvalidActionError("host id out of range: " + std::to_string(host));
}

Subnet cage_host_subnet(int host) {
    switch (cage_host_role(host)) {
        case HostRole::UserHost: return Subnet::User;
        case HostRole::EnterpriseHost:
        case HostRole::DefenderHost: return Subnet::Enterprise;
        case HostRole::OpHost:
        case HostRole::OpServer: return Subnet::Operational;
    }
    return Subnet::User;
}

RedActionCage bline_next(const CageState& state) {
    const RedAccess op = state.hosts[kOpServer].red_access;
    if (op == RedAccess::Privileged) return {RedActionCage::Kind::Impact, kOpServer};
    if (op == RedAccess::UserLevel) return {RedActionCage::Kind::PrivEsc, kOpServer};

    const RedAccess e0 = state.hosts[kEnterpriseHost0].red_access;
    if (e0 == RedAccess::Privileged) return {RedActionCage::Kind::Exploit, kOpServer};
    if (e0 == RedAccess::UserLevel) return {RedActionCage::Kind::PrivEsc, kEnterpriseHost0};

    const RedAccess u0 = state.hosts[kUserHost0].red_access;
    if (u0 == RedAccess::Privileged) return {RedActionCage::Kind::Exploit, kEnterpriseHost0};
    if (u0 == RedAccess::UserLevel) return {RedActionCage::Kind::PrivEsc, kUserHost0};

    return {RedActionCage::Kind::Exploit, kUserHost0};
}

RedEvents apply_red_cage(CageState& state, const RedActionCage& action) {
    RedEvents events;
    Host& host = state.hosts.at(action.target);
    events.touched_host = host.id;
    switch (action.kind) {
        case RedActionCage::Kind::Exploit:
            host.activity_this_step = Activity::Exploited;
            if (host.decoy_active) {
                host.decoy_active = false;  // decoy absorbs the exploit
            } else if (host.red_access == RedAccess::None) {
                host.red_access = RedAccess::UserLevel;
            }
            break;
        case RedActionCage::Kind::PrivEsc:
            host.activity_this_step = Activity::Exploited;
            if (host.red_access == RedAccess::UserLevel) {
                host.red_access = RedAccess::Privileged;
                events.privesc_host = host.id;
            }
            break;
        case RedActionCage::Kind::Impact:
            host.activity_this_step = Activity::Exploited;
            if (host.id != kOpServer || host.red_access != RedAccess::Privileged) {
                throw std::logic_error("impact emitted without privileged operational server");
            }
            events.impacted = true;
            break;
    }
    events.level_after = host.red_access;
    return events;
}

void apply_blue_cage(CageState& state, const BlueActionCage& action) {
    switch (action.kind) {
        case BlueActionCage::Kind::Sleep:
        case BlueActionCage::Kind::Monitor:
            return;
        default:
            break;
    }
    if (action.target < 0 || action.target >= kCageHostCount) {
        throw InvalidActionError("host id out of range: " + std::to_string(action.target));
    }
    Host& host = state.hosts[action.target];
    switch (action.kind) {
        case BlueActionCage::Kind::Analyse:
            return;  // knowledge model handled by the environment
        case BlueActionCage::Kind::Remove:
            if (host.red_access == RedAccess::UserLevel) {
                host.red_access = RedAccess::None;
            }
            return;
        case BlueActionCage::Kind::Restore:
            host.red_access = RedAccess::None;
            return;
        case BlueActionCage::Kind::Decoy:
            if (host.red_access == RedAccess::None) {
                host.decoy_active = true;  // persists until consumed
            }
            return;
        default:
            return;
    }
}

CageEnv::CageEnv(const CageConfig& config) : cfg_(config), rng_(config.rng_seed) {
    if (cfg_.episode_length < 1) {
        throw ConfigError("episode_length must be >= 1");
    }
    if (cfg_.reward.environment != RewardEnv::Cage) {
        throw ConfigError("CAGE environment requires a CAGE reward spec");
    }
    validate(cfg_.reward);
    reset();
}

std::vector<double> CageEnv::reset() {
    for (int h = 0; h < kCageHostCount; ++h) {
        state_.hosts[h] = Host{h, cage_host_subnet(h), cage_host_role(h),
                               RedAccess::None, false, Activity::NoActivity};
    }
    analysed_.fill(false);
    knowledge_.fill(Knowledge::None);
    monitored_this_step_ = false;
    step_count_ = 0;
    done_ = false;
    return observe();
}

void CageEnv::reseed(std::uint64_t seed) {
    rng_.seed(seed);
    reset();
}

int CageEnv::cage_compromised_count() const {
    int count = 0;
    for (const Host& h : state_.hosts) {
        if (h.red_access != RedAccess::None) ++count;
    }
    return count;
}

bool CageEnv::red_confined_to_user_subnet() const {
    for (const Host& h : state_.hosts) {
        if (h.red_access == RedAccess::Privileged) return false;
        if (h.red_access != RedAccess::None && h.subnet != Subnet::User) return false;
    }
    return true;
}

StepRecord CageEnv::step(const BlueActionCage& blue) {
    return step_impl([&blue] { return blue; });
}

StepRecord CageEnv::step_policy(const PolicyFn& policy) {
    return step_impl([this, &policy] { return decode_action(policy(observe())); });
}

StepRecord CageEnv::step_impl(const std::function<BlueActionCage()>& blue_provider) {
    if (done_) {
        throw EpisodeFinishedError("step() called on a finished episode");
    }
    for (Host& h : state_.hosts) {
        h.activity_this_step = Activity::NoActivity;
    }

    StepRecord rec;
    rec.red_first = true;  // fixed red-then-blue order

    const RedActionCage red = bline_next(state_);
    const RedEvents events = apply_red_cage(state_, red);
    int m_intra = cage_compromised_count();

    const BlueActionCage blue = blue_provider();
    monitored_this_step_ = blue.kind == BlueActionCage::Kind::Monitor;
    apply_blue_cage(state_, blue);
    if (blue.kind == BlueActionCage::Kind::Analyse) {
        analysed_[blue.target] = true;
    }
    m_intra = std::max(m_intra, cage_compromised_count());

    // Knowledge model: a monitored step reveals the access level red reached
    // on the host it touched; unmonitored activity only marks it as unknown.
    if (events.touched_host >= 0 && !analysed_[events.touched_host]) {
        if (monitored_this_step_) {
            switch (events.level_after) {
                case RedAccess::None: knowledge_[events.touched_host] = Knowledge::Unknown; break;
                case RedAccess::UserLevel: knowledge_[events.touched_host] = Knowledge::User; break;
                case RedAccess::Privileged:
                    knowledge_[events.touched_host] = Knowledge::Privileged;
                    break;
            }
        } else {
            knowledge_[events.touched_host] = Knowledge::Unknown;
        }
    }

    rec.m_end = cage_compromised_count();
    rec.m_intra = m_intra;
    rec.score_gt = std::max(rec.m_intra, rec.m_end);
    rec.impacted = events.impacted;
    rec.privesc_host = events.privesc_host;
    if (events.privesc_host >= 0) {
        rec.privesc_role = cage_host_role(events.privesc_host);
    }

    TransitionSummary summary;
    summary.end_compromised_count = rec.m_end;
    summary.total_nodes = kCageHostCount;
    switch (blue.kind) {
        case BlueActionCage::Kind::Sleep: summary.blue_action = ActionTag::Sleep; break;
        case BlueActionCage::Kind::Monitor: summary.blue_action = ActionTag::Monitor; break;
        case BlueActionCage::Kind::Analyse: summary.blue_action = ActionTag::Analyse; break;
        case BlueActionCage::Kind::Remove: summary.blue_action = ActionTag::Remove; break;
        case BlueActionCage::Kind::Restore: summary.blue_action = ActionTag::Restore; break;
        case BlueActionCage::Kind::Decoy: summary.blue_action = ActionTag::Decoy; break;
    }
    for (int h = 0; h < kCageHostCount; ++h) {
        summary.cage.access[h] = state_.hosts[h].red_access;
        summary.cage.roles[h] = state_.hosts[h].role;
    }
    summary.cage.impacted_this_step = events.impacted;
    summary.cage.red_confined_to_user_subnet = red_confined_to_user_subnet();
    rec.reward = reward_cage(cfg_.reward, summary);

    rec.blue_action = summary.blue_action;
    rec.blue_target = blue.target;
    switch (red.kind) {
        case RedActionCage::Kind::Exploit: rec.red_action.kind = RedMoveKind::Exploit; break;
        case RedActionCage::Kind::PrivEsc: rec.red_action.kind = RedMoveKind::PrivEsc; break;
        case RedActionCage::Kind::Impact: rec.red_action.kind = RedMoveKind::Impact; break;
    }
    rec.red_action.target = red.target;

    ++step_count_;
    done_ = step_count_ >= cfg_.episode_length;
    rec.done = done_;
    rec.observation = observe();
    return rec;
}

BlueActionCage CageEnv::decode_action(int index) const {
    if (index == 0) return BlueActionCage::sleep();
    if (index == 1) return BlueActionCage::monitor();
    const int base = index - 2;
    const int family = base / kCageHostCount;
    const int host = base % kCageHostCount;
    if (index < 2 || index >= action_count()) {
        throw InvalidActionError("action index out of range: " + std::to_string(index));
    }
    switch (family) {
        case 0: return BlueActionCage::analyse(host);
        case 1: return BlueActionCage::remove(host);
        case 2: return BlueActionCage::restore(host);
        case 3: return BlueActionCage::decoy(host);
    }
    throw InvalidActionError("action index out of range: " + std::to_string(index));
}

StepRecord CageEnv::step_action(int action_index) {
    return step(decode_action(action_index));
}

std::vector<double> CageEnv::observe() const {
    // 13 hosts x [activity msb, activity lsb, access msb, access lsb].
    // Activity: 00 none, 01 scanned, 10 exploited (shown when monitored).
    // Access: 00 none, 01 unknown, 10 user, 11 privileged.
    std::vector<double> obs(52, 0.0);
    for (int h = 0; h < kCageHostCount; ++h) {
        const std::size_t base = static_cast<std::size_t>(h) * 4;
        if (monitored_this_step_) {
            switch (state_.hosts[h].activity_this_step) {
                case Activity::NoActivity: break;
                case Activity::Scanned: obs[base + 1] = 1.0; break;
                case Activity::Exploited: obs[base + 0] = 1.0; break;
            }
        }
        Knowledge shown = knowledge_[h];
        if (analysed_[h]) {
            switch (state_.hosts[h].red_access) {
                case RedAccess::None: shown = Knowledge::None; break;
                case RedAccess::UserLevel: shown = Knowledge::User; break;
                case RedAccess::Privileged: shown = Knowledge::Privileged; break;
            }
        }
        switch (shown) {
            case Knowledge::None: break;
            case Knowledge::Unknown: obs[base + 3] = 1.0; break;
            case Knowledge::User: obs[base + 2] = 1.0; break;
            case Knowledge::Privileged:
                obs[base + 2] = 1.0;
                obs[base + 3] = 1.0;
                break;
        }
    }
    return obs;
}

std::vector<ActionTag> CageEnv::action_tags() const {
    return {ActionTag::Sleep, ActionTag::Monitor, ActionTag::Analyse,
            ActionTag::Remove, ActionTag::Restore, ActionTag::Decoy};
}

}  // namespace acd
