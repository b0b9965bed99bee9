#pragma once

#include "starla/environment.hpp"
#include "starla/episode.hpp"
#include "starla/network.hpp"

#include <array>
#include <span>
#include <vector>

namespace starla {

/// 1 - cos(u, v). Zero vectors: 0 if both are zero, 1 if only one is.
double cosine_distance(const State& u, const State& v);

struct ExecutionOutcome {
    bool valid = true;
    std::size_t deviations = 0;
    std::vector<double> deviation_distances;
    bool observed_fault = false;
    Episode executed; ///< what the environment actually did, replacement included
};

/// Re-executes a recorded episode. When the agent disagrees with the recorded
/// action, the environment is moved to the recorded state and the agent asked
/// again; a second disagreement makes the episode invalid.
ExecutionOutcome replay_episode(const Episode& e, const QNetwork& agent, const EnvironmentConfig& env);

std::vector<ExecutionOutcome> replay_all(std::span<const Episode> episodes, const QNetwork& agent,
                                         const EnvironmentConfig& env);
std::vector<ExecutionOutcome> replay_all_serial(std::span<const Episode> episodes, const QNetwork& agent,
                                                const EnvironmentConfig& env);

struct ValidationReport {
    static constexpr std::size_t bins = 8; ///< deviation distances over [0, 2)

    std::size_t episodes = 0;
    std::size_t valid = 0;
    std::size_t invalid = 0;
    std::size_t valid_faults = 0;
    std::size_t deviations = 0;
    std::size_t episodes_with_deviations = 0;
    std::array<std::size_t, bins> histogram{};
    double fraction_below_quarter = 0.0; ///< share of deviations at cosine distance < 0.25; 0 when none
};

ValidationReport summarize(std::span<const ExecutionOutcome> outcomes);

} // namespace starla
