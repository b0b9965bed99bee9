#pragma once

#include "starla/rng.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starla {

enum class EnvKind { cart_pole, mountain_car };

enum class TerminationCause { none, time_limit, goal, angle_limit, boundary_fault };

std::string_view to_string(EnvKind kind);
std::string_view to_string(TerminationCause cause);
EnvKind env_kind_from_string(std::string_view name);
TerminationCause termination_cause_from_string(std::string_view name);

/// Observation vector of one of the benchmark environments (at most four features).
class State {
public:
    static constexpr std::size_t max_dim = 4;

    State() = default;
    State(std::initializer_list<double> values);
    explicit State(std::span<const double> values);

    std::size_t size() const { return dim_; }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const { return {values_.data(), dim_}; }
    std::span<double> values() { return {values_.data(), dim_}; }
    bool all_finite() const;

    friend bool operator==(const State&, const State&) = default;

private:
    std::array<double, max_dim> values_{};
    std::size_t dim_ = 0;
};

struct StepOutcome {
    State next_state;
    double reward = 0.0;
    bool terminated = false;
    TerminationCause cause = TerminationCause::none;
};

struct FeatureRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct CartPoleConstants {
    double gravity = 9.8;
    double cart_mass = 1.0;
    double pole_mass = 0.1;
    double half_pole_length = 0.5;
    double force_magnitude = 10.0;
    double timestep = 0.02;
    double position_limit = 2.4;
    double angle_limit = 12.0 * 2.0 * 3.14159265358979323846 / 360.0;
};

struct MountainCarConstants {
    double force = 0.001;
    double gravity = 0.0025;
    double min_position = -1.2;
    double max_position = 0.6;
    double max_speed = 0.07;
    double goal_position = 0.5;
    // Crashing into the left border ends the episode with the lowest
    // achievable return: the crash step is charged every remaining step.
    bool crash_charges_remaining_steps = true;
};

struct EnvironmentConfig {
    EnvKind kind = EnvKind::cart_pole;
    CartPoleConstants cart_pole;
    MountainCarConstants mountain_car;
    int max_steps = 200;
    std::vector<FeatureRange> initial_ranges;
    /// Per-feature mutation magnitudes; empty means 5% of each feature's valid span.
    std::vector<double> perturbation;
    std::uint64_t seed = 0;

    static EnvironmentConfig defaults(EnvKind kind);

    std::size_t observation_dim() const;
    std::size_t action_count() const;
    /// Physically valid feature box used to clamp perturbed states.
    std::vector<FeatureRange> feature_box() const;
    std::vector<double> perturbation_magnitudes() const;
    void validate() const;
};

/// Seedable Cart-Pole / Mountain Car simulation with explicit Euler dynamics.
class Environment {
public:
    explicit Environment(EnvironmentConfig config);

    const EnvironmentConfig& config() const { return config_; }
    std::size_t observation_dim() const { return config_.observation_dim(); }
    std::size_t action_count() const { return config_.action_count(); }

    State reset(Rng& rng);
    void set_state(const State& s);
    const State& state() const { return state_; }
    int steps_taken() const { return steps_; }
    void set_steps_taken(int steps);
    bool terminated() const { return terminated_; }

    StepOutcome step(int action);

private:
    StepOutcome step_cart_pole(int action);
    StepOutcome step_mountain_car(int action);

    EnvironmentConfig config_;
    State state_;
    int steps_ = 0;
    bool terminated_ = false;
};

bool is_functional_fault(TerminationCause cause);
bool is_functional_fault(const StepOutcome& outcome);

/// Post-hoc check of the safety requirement on a stored terminal state.
bool violates_boundary(const EnvironmentConfig& config, const State& s);

State perturb_state(const State& s, std::span<const double> magnitudes,
                    std::span<const FeatureRange> box, Rng& rng);

} // namespace starla
