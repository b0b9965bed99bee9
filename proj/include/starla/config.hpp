#pragma once

#include "starla/classifier.hpp"
#include "starla/dqn.hpp"
#include "starla/environment.hpp"
#include "starla/io.hpp"
#include "starla/search.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace starla {

struct DatasetConfig {
    std::size_t initial_population = 300; ///< random executions: search seed and surrogate data
    std::size_t training_episodes = 130;  ///< sampled from the training log for the surrogate
    std::size_t baseline_pool = 10000;    ///< random-testing pool
};

struct ClassifierConfig {
    ForestParams forest;
    double test_fraction = 0.3;
};

struct ExperimentConfig {
    std::size_t runs = 10;
    std::size_t resamples = 100;
    std::vector<double> rq2_levels;
    std::size_t rq2_random_episodes = 1100;
    std::size_t rq2_training_episodes = 400;
    std::size_t rq3_folds = 5;
    std::size_t rq3_max_depth = 0;
};

/// Everything one campaign needs, read from a single JSON file.
struct CampaignConfig {
    std::uint64_t seed = 1;
    std::filesystem::path output_dir = "out";
    /// Environment the agent is tested in; `training_ranges` are the initial
    /// ranges used while training (empty = environment defaults).
    EnvironmentConfig env;
    std::vector<FeatureRange> training_ranges;
    TrainConfig train;
    double d = 1.0;
    DatasetConfig dataset;
    ClassifierConfig classifier;
    SearchConfig search;
    FitnessThresholds thresholds;
    ExperimentConfig experiments;

    static CampaignConfig defaults(EnvKind kind);
    /// Missing fields take the defaults of the declared environment kind.
    static CampaignConfig from_json(const Json& j);
    Json to_json() const;
    void validate() const;

    EnvironmentConfig training_env() const;
    /// Hash of the canonical JSON form, output directory excluded.
    std::string hash() const;
};

/// Throws ConfigError naming the file and the offending field.
CampaignConfig load_config(const std::filesystem::path& path);

std::string fnv1a_hex(std::string_view text);

} // namespace starla
