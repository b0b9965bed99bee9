#pragma once

#include "starla/features.hpp"
#include "starla/rng.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace starla {

/// Binary-feature rows with labels 1 = functional fault, 0 = no fault.
struct Dataset {
    std::size_t feature_count = 0;
    std::vector<FeatureVector> rows;
    std::vector<int> labels;

    std::size_t size() const { return rows.size(); }
    void add(FeatureVector row, int label);
    Dataset subset(std::span<const std::size_t> indices) const;
    std::size_t positives() const;
};

double gini(std::size_t negatives, std::size_t positives);

struct TreeNode {
    int feature = -1; ///< tested feature, -1 for a leaf
    int absent = -1;  ///< child taken when the feature is 0
    int present = -1; ///< child taken when the feature is 1
    std::array<std::size_t, 2> counts{};
    int predicted = 0;
    double fault_probability = 0.0;

    bool is_leaf() const { return feature < 0; }
};

/// Nodes are stored in preorder; node 0 is the root.
class DecisionTree {
public:
    DecisionTree() = default;
    DecisionTree(std::size_t feature_count, std::vector<TreeNode> nodes);

    std::size_t feature_count() const { return feature_count_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    std::size_t depth() const;

    std::size_t leaf_for(const FeatureVector& x) const;
    double fault_probability(const FeatureVector& x) const;
    int predict(const FeatureVector& x) const;

private:
    std::size_t feature_count_ = 0;
    std::vector<TreeNode> nodes_;
};

struct TreeParams {
    std::size_t max_depth = 0;          ///< 0 = unlimited
    std::size_t min_leaf = 1;
    std::size_t features_per_split = 0; ///< 0 = every non-constant feature
};

/// Greedy Gini splits; ties between equal gains go to the lowest feature index.
DecisionTree train_tree(const Dataset& data, const TreeParams& params, Rng& rng);

struct ForestParams {
    std::size_t trees = 100;
    std::size_t features_per_split = 0; ///< 0 = ceil(sqrt(feature_count))
    std::size_t max_depth = 0;
    std::size_t min_leaf = 1;
    bool bootstrap = true;
    std::uint64_t seed = 1;
};

class FaultForest {
public:
    FaultForest() = default;
    FaultForest(std::size_t feature_count, std::vector<DecisionTree> trees, std::vector<std::uint64_t> seeds);

    std::size_t feature_count() const { return feature_count_; }
    const std::vector<DecisionTree>& trees() const { return trees_; }
    const std::vector<std::uint64_t>& seeds() const { return seeds_; }

    /// Mean over trees of the leaf fault fraction.
    double predict_fault_probability(const FeatureVector& x) const;
    int predict(const FeatureVector& x) const;

private:
    std::size_t feature_count_ = 0;
    std::vector<DecisionTree> trees_;
    std::vector<std::uint64_t> seeds_;
};

/// Tree t uses stream derive_seed(seed, t), so the OpenMP and serial builds are identical.
FaultForest train_forest(const Dataset& data, const ForestParams& params);
FaultForest train_forest_serial(const Dataset& data, const ForestParams& params);

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Metrics on the fault class; empty denominators yield 0.
Metrics binary_metrics(std::span<const int> predicted, std::span<const int> actual);

using Predictor = std::function<int(const FeatureVector&)>;
using Learner = std::function<Predictor(const Dataset&, Rng&)>;

struct KFoldReport {
    std::vector<Metrics> folds;
    Metrics median;
};

/// Stratified k-fold cross-validation.
KFoldReport kfold_metrics(const Dataset& data, std::size_t k, const Learner& learner, Rng& rng);

/// Random split into (train, test) with `test_fraction` of the rows held out.
std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double test_fraction, Rng& rng);

struct Literal {
    std::size_t feature = 0;
    bool present = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct Rule {
    std::vector<Literal> literals;
    int predicted = 1;
    std::size_t support = 0;
    double confidence = 0.0;

    bool matches(const FeatureVector& x) const;
    std::string to_string() const;
};

/// One rule per fault-predicting leaf.
std::vector<Rule> extract_rules(const DecisionTree& tree);
/// One rule per leaf, whatever its prediction.
std::vector<Rule> leaf_rules(const DecisionTree& tree);
/// 1 iff some fault rule matches `x`.
int classify_with_rules(std::span<const Rule> fault_rules, const FeatureVector& x);

struct ForestFile {
    FaultForest forest;
    std::string config_hash;
    std::uint64_t seed = 0;
};

void save_forest(const std::filesystem::path& path, const FaultForest& forest, const std::string& config_hash,
                 std::uint64_t seed);
ForestFile load_forest(const std::filesystem::path& path);

} // namespace starla
