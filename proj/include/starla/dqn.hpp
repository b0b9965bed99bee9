#pragma once

#include "starla/environment.hpp"
#include "starla/episode.hpp"
#include "starla/network.hpp"

#include <cstdint>
#include <vector>

namespace starla {

enum class Optimizer { sgd, adam };

struct TrainConfig {
    std::uint64_t total_timesteps = 50000;
    std::size_t replay_capacity = 50000;
    std::size_t batch_size = 64;
    double gamma = 0.99;
    double learning_rate = 1e-3;
    Optimizer optimizer = Optimizer::adam;
    std::uint64_t target_sync_interval = 500;
    std::uint64_t learning_starts = 1000;
    std::uint64_t train_frequency = 1;
    std::uint64_t gradient_steps = 1;
    double huber_delta = 1.0;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    double epsilon_fraction = 0.1;
    std::vector<std::size_t> hidden = {64, 64};
    /// When > 0, the greedy policy is evaluated every `eval_interval` steps on
    /// `eval_episodes` fixed-seed episodes and the best-scoring weights are returned.
    std::uint64_t eval_interval = 0;
    std::size_t eval_episodes = 20;
    std::uint64_t seed = 1;

    void validate() const;
};

struct TrainingLog {
    std::vector<Episode> episodes; ///< in completion order, origin = training
};

struct TrainResult {
    QNetwork net;
    TrainingLog log;
    std::uint64_t steps = 0;
};

/// Linear epsilon schedule from start to end over the first `fraction` of steps.
double epsilon_at(const TrainConfig& config, std::uint64_t step);

/// Double-DQN bootstrap: the online network picks the next action, the target network values it.
double double_dqn_target(double reward, bool terminal, double gamma, std::span<const double> online_next,
                         std::span<const double> target_next);

/// Fixed affine input normalization mapping the environment's feature box to [-1, 1].
void normalize_for(QNetwork& net, const EnvironmentConfig& env);

/// Trains a double DQN; throws TrainingError if the loss becomes non-finite.
TrainResult train_dqn(const EnvironmentConfig& env, const TrainConfig& config);

struct PolicySummary {
    double mean_reward = 0.0;
    double mean_length = 0.0;
    double fault_rate = 0.0;
};

PolicySummary evaluate_policy(const EnvironmentConfig& env, const QNetwork& agent, std::size_t episodes,
                              std::uint64_t seed);

} // namespace starla
