#pragma once

#include <string>

#include "acdgym/episode_scoring.hpp"
#include "acdgym/yt_env.hpp"

namespace acd {

// YT: always scans.
PolicyFn make_noop_blue();

// YT: restores the lowest-index compromised node, scans when the network is
// clean. Optimal under red-then-blue ordering.
PolicyFn make_restore_frontier(const YtConfig& config);

// YT, extended space: places a decoy on red's current target every step,
// restoring instead if any node is compromised. Optimal under blue-then-red.
PolicyFn make_decoy_frontier(const YtConfig& config);

// CAGE: always sleeps.
PolicyFn make_sleep_only();

// CAGE: restores the lowest host whose access bits are nonzero, monitors
// otherwise.
PolicyFn make_restore_known_access();

bool is_scripted_policy(const std::string& name);

// Names: NOOP, RESTORE_FRONTIER, DECOY_FRONTIER (YT); SLEEP_ONLY,
// RESTORE_KNOWN (CAGE). The YT config is ignored for CAGE policies.
PolicyFn make_scripted_policy(const std::string& name, const YtConfig& yt_config);

}  // namespace acd
