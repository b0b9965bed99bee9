#pragma once

#include "starla/environment.hpp"
#include "starla/rng.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace starla {

enum class Activation { identity, relu };

struct DenseLayer {
    std::size_t inputs = 0;
    std::size_t outputs = 0;
    std::vector<double> weights; // outputs x inputs, row-major
    std::vector<double> bias;
    Activation activation = Activation::identity;
};

/// Feed-forward Q-network. Inputs are shifted and scaled by a fixed
/// per-feature normalization before the first layer.
class QNetwork {
public:
    QNetwork() = default;
    explicit QNetwork(std::vector<DenseLayer> layers, std::vector<double> input_offset = {},
                      std::vector<double> input_scale = {});

    /// Hidden layers use ReLU, the output layer is linear. He-uniform initialization.
    static QNetwork make(std::size_t inputs, std::span<const std::size_t> hidden, std::size_t outputs, Rng& rng);

    std::size_t input_dim() const;
    std::size_t output_dim() const;
    std::size_t max_width() const;

    const std::vector<DenseLayer>& layers() const { return layers_; }
    std::vector<DenseLayer>& layers() { return layers_; }
    const std::vector<double>& input_offset() const { return input_offset_; }
    const std::vector<double>& input_scale() const { return input_scale_; }
    void set_input_normalization(std::vector<double> offset, std::vector<double> scale);

    void evaluate(std::span<const double> input, std::span<double> q) const;
    std::vector<double> q_values(std::span<const double> input) const;

    /// Throws DimensionError when layer shapes do not chain, ArgumentError on non-finite parameters.
    void validate() const;

private:
    std::vector<DenseLayer> layers_;
    std::vector<double> input_offset_;
    std::vector<double> input_scale_;
};

std::vector<double> q_values(const QNetwork& net, const State& s);

/// Argmax with ties resolved to the lowest index.
int select_action(std::span<const double> q);
int select_action(const QNetwork& net, const State& s);

std::vector<double> softmax(std::span<const double> q, double temperature);
std::vector<double> action_probabilities(const QNetwork& net, const State& s, double temperature);

struct Gradients {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> bias;

    static Gradients like(const QNetwork& net);
    void zero();
};

/// Mean Huber loss (delta <= 0 selects 0.5*e^2) between Q(s_i, a_i) and
/// target_i over the batch. When `grad` is non-null the gradient with
/// respect to every parameter is written into it.
double regression_loss(const QNetwork& net, std::span<const State> states, std::span<const int> actions,
                       std::span<const double> targets, double huber_delta, Gradients* grad);

struct AgentRecord {
    EnvKind env = EnvKind::cart_pole;
    QNetwork net;
    std::uint64_t seed = 0;
    std::uint64_t timesteps = 0;
    std::string config_hash;
};

inline constexpr std::uint32_t agent_format_version = 1;

void save_agent(const std::filesystem::path& path, const AgentRecord& agent);
AgentRecord load_agent(const std::filesystem::path& path);

} // namespace starla
