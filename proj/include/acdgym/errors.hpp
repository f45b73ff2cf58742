#pragma once

#include <stdexcept>
#include <string>

namespace acd {

// Malformed topology parameters (e.g. a line graph with fewer than 2 nodes).
struct InvalidTopologyError : std::invalid_argument {
    explicit InvalidTopologyError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Action illegal for the current action space or target.
struct InvalidActionError : std::invalid_argument {
    explicit InvalidActionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// step() called after the episode finished.
struct EpisodeFinishedError : std::logic_error {
    explicit EpisodeFinishedError(const std::string& msg) : std::logic_error(msg) {}
};

// Invalid or inconsistent experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Empty or malformed input to a statistics function.
struct MetricError : std::invalid_argument {
    explicit MetricError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace acd
