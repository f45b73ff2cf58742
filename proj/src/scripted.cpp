#include "acdgym/scripted.hpp"

#include <memory>

#include "acdgym/cage_env.hpp"

namespace acd {

namespace {

// Reads the compromise bits from a YT observation (final n entries).
int lowest_compromised(const std::vector<double>& obs, int n) {
    const std::size_t offset = obs.size() - static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) {
        if (obs[offset + i] != 0.0) return i;
    }
    return -1;
}

}  // namespace

PolicyFn make_noop_blue() {
    return [](const std::vector<double>&) { return 0; };
}

PolicyFn make_restore_frontier(const YtConfig& config) {
    const int n = config.node_count;
    return [n](const std::vector<double>& obs) {
        const int target = lowest_compromised(obs, n);
        return target < 0 ? 0 : 1 + target;
    };
}

PolicyFn make_decoy_frontier(const YtConfig& config) {
    if (config.action_space != YtActionSpace::Extended) {
        throw ConfigError("DECOY_FRONTIER requires the extended action space");
    }
    const int n = config.node_count;
    auto state = std::make_shared<NetworkState>(make_linear_topology(n));
    return [n, state](const std::vector<double>& obs) {
        const int compromised = lowest_compromised(obs, n);
        if (compromised >= 0) return 1 + compromised;
        const std::size_t offset = obs.size() - static_cast<std::size_t>(n);
        for (int i = 0; i < n; ++i) {
            state->statuses[i].compromised = obs[offset + i] != 0.0;
        }
        const auto target = red_frontier(*state);
        if (!target) return 0;
        return 1 + n + *target;
    };
}

PolicyFn make_sleep_only() {
    return [](const std::vector<double>&) { return 0; };
}

PolicyFn make_restore_known_access() {
    return [](const std::vector<double>& obs) {
        for (int h = 0; h < kCageHostCount; ++h) {
            const std::size_t base = static_cast<std::size_t>(h) * 4;
            if (obs[base + 2] != 0.0 || obs[base + 3] != 0.0) {
                return 2 + 2 * kCageHostCount + h;  // restore(h)
            }
        }
        return 1;  // monitor
    };
}

bool is_scripted_policy(const std::string& name) {
    return name == "NOOP" || name == "RESTORE_FRONTIER" || name == "DECOY_FRONTIER" ||
           name == "SLEEP_ONLY" || name == "RESTORE_KNOWN";
}

PolicyFn make_scripted_policy(const std::string& name, const YtConfig& yt_config) {
    if (name == "NOOP") return make_noop_blue();
    if (name == "RESTORE_FRONTIER") return make_restore_frontier(yt_config);
    if (name == "DECOY_FRONTIER") return make_decoy_frontier(yt_config);
    if (name == "SLEEP_ONLY") return make_sleep_only();
    if (name == "RESTORE_KNOWN") return make_restore_known_access();
    throw ConfigError("unknown scripted policy: " + name);
}

}  // namespace acd
