#pragma once

#include "starla/abstraction.hpp"
#include "starla/environment.hpp"
#include "starla/features.hpp"
#include "starla/network.hpp"
#include "starla/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace starla {

enum class Origin { training, random, crossover, mutated };

std::string_view to_string(Origin origin);
Origin origin_from_string(std::string_view name);

struct Step {
    State state;
    int action = 0;
    double reward = 0.0;

    friend bool operator==(const Step&, const Step&) = default;
};

struct Episode {
    std::uint64_t id = 0;
    Origin origin = Origin::random;
    EnvKind env = EnvKind::cart_pole;
    std::vector<Step> steps;
    State final_state; ///< state reached by the last step
    TerminationCause termination_cause = TerminationCause::none;
    bool fault = false;
    double accumulated_reward = 0.0;

    std::size_t length() const { return steps.size(); }
    std::vector<State> states() const;
    /// Recompute accumulated_reward and fault from steps and termination cause.
    void finalize();

    friend bool operator==(const Episode&, const Episode&) = default;
};

double accumulated_reward(std::span<const Step> steps);

/// Functional-fault label; throws StateError for an episode that never terminated.
bool label_fault(const Episode& e);

/// Appends greedy-policy steps to `e` from the environment's current state until termination.
void roll_out(Environment& env, const QNetwork& agent, Episode& e);

/// Episodes starting from fresh random initial states under the greedy policy.
/// Episode i draws its initial state from stream `derive_seed(seed, i)` and gets id `first_id + i`.
std::vector<Episode> run_random_episodes(const EnvironmentConfig& config, const QNetwork& agent, std::size_t count,
                                         std::uint64_t seed, std::uint64_t first_id = 0);
std::vector<Episode> run_random_episodes_serial(const EnvironmentConfig& config, const QNetwork& agent,
                                                std::size_t count, std::uint64_t seed, std::uint64_t first_id = 0);

/// Selection weights i / sum(1..n) for the i-th (1-based) training episode.
std::vector<double> late_episode_weights(std::size_t n);

/// Weighted sampling without replacement; weights renormalized after each draw.
std::vector<Episode> sample_training_episodes(std::span<const Episode> log, std::size_t k, Rng& rng);

/// Presence bits over the `index.size()` known abstract states.
FeatureVector encode_features(const Episode& e, const AbstractionIndex& index, const QNetwork& agent);
/// Same from precomputed per-state ids; ids outside [0, n) are ignored.
FeatureVector encode_ids(std::span<const AbstractStateId> ids, std::size_t n);

struct EpisodeFile {
    std::vector<Episode> episodes;
    std::string config_hash;
    std::uint64_t seed = 0;
};

/// One JSON record per line; the first line is the artifact header.
void save_episodes(const std::filesystem::path& path, std::span<const Episode> episodes,
                   const std::string& config_hash, std::uint64_t seed);
EpisodeFile load_episodes(const std::filesystem::path& path);

} // namespace starla
