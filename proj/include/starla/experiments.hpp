#pragma once

#include "starla/abstraction.hpp"
#include "starla/classifier.hpp"
#include "starla/episode.hpp"
#include "starla/replay.hpp"
#include "starla/search.hpp"
#include "starla/stats.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace starla {

/// Binary abstract-state presence rows labeled with each episode's fault flag.
Dataset build_dataset(std::span<const Episode> episodes, const AbstractionIndex& index, const QNetwork& agent);

/// All states of the episodes, in episode order.
std::vector<State> collect_states(std::span<const Episode> episodes);

struct Surrogate {
    AbstractionIndex index{AbstractionLevel(1.0), 1};
    FaultForest forest;
    Metrics holdout;          ///< forest trained on the training split, scored on the rest
    std::size_t train_rows = 0;
    std::size_t test_rows = 0;
};

/// Index over every state of `episodes`; a forest evaluated on a random split,
/// then refit on all rows for use during the search.
Surrogate train_surrogate(std::span<const Episode> episodes, const QNetwork& agent, AbstractionLevel d,
                          const ForestParams& params, double test_fraction, std::uint64_t seed);
/// Same with a prebuilt index.
Surrogate fit_surrogate(AbstractionIndex index, std::span<const Episode> episodes, const QNetwork& agent,
                        const ForestParams& params, double test_fraction, std::uint64_t seed);

enum class BudgetScenario { provided_initial, self_generated };

std::string_view to_string(BudgetScenario s);

/// Executed-episode budget: N + M, plus the initial population when it had to be generated.
std::size_t budget(BudgetScenario s, std::size_t n, std::size_t m, std::size_t initial);

struct CampaignRun {
    SearchResult search;
    std::vector<ExecutionOutcome> outcomes; ///< one per archive entry; initial members are not re-executed
    std::size_t replays = 0;                ///< archive episodes executed after the search
    std::size_t search_faults = 0;          ///< N: validated faults the search produced
    std::size_t initial_faults = 0;         ///< faults already in the initial population
};

/// One search run followed by validation of its archive. Archive entries keep
/// their surrogate fitness; `fault` is overwritten by the replay observation.
CampaignRun run_campaign(const SearchConfig& config, const FitnessThresholds& thresholds,
                         std::span<const Episode> initial, const SearchModels& models);

struct ScenarioComparison {
    BudgetScenario scenario = BudgetScenario::provided_initial;
    std::size_t budget = 0;
    std::vector<double> starla_faults;   ///< per run
    std::vector<double> baseline_faults; ///< per resample
    double starla_mean = 0.0;
    double baseline_mean = 0.0;
    UTestResult test;
};

struct Rq1Report {
    std::size_t runs = 0;
    std::size_t initial_size = 0;
    double mean_n = 0.0;
    double mean_m = 0.0;
    std::vector<std::size_t> n;
    std::vector<std::size_t> m;
    std::vector<std::size_t> replays;
    std::vector<std::uint64_t> seeds;
    ScenarioComparison provided;
    ScenarioComparison self_generated;
    ValidationReport validation; ///< pooled over every run
    std::vector<Episode> validated_faults; ///< search-produced faults of every run
};

struct Rq1Params {
    std::size_t runs = 10;
    std::size_t resamples = 100;
    std::uint64_t seed = 1;
};

/// Seeded search runs on a shared initial population and surrogate, compared
/// against with-replacement resamples of size B from a random-testing pool.
Rq1Report run_rq1(const Rq1Params& params, const SearchConfig& search, const FitnessThresholds& thresholds,
                  std::span<const Episode> initial, const SearchModels& models, std::span<const Episode> baseline);

/// Faulty episodes among `sample` (indices into `pool`).
std::size_t count_faults(std::span<const Episode> pool, std::span<const std::size_t> sample);

struct Rq2Row {
    double d = 0.0;
    std::size_t states = 0;
    Metrics metrics;
};

/// For each level: rebuild the index, re-encode, split, fit a forest, score it.
std::vector<Rq2Row> run_rq2_sweep(std::span<const double> levels, std::span<const Episode> episodes,
                                  const QNetwork& agent, const ForestParams& params, double test_fraction,
                                  std::uint64_t seed);

struct RuleDataset {
    Dataset data;
    AbstractionIndex index{AbstractionLevel(1.0), 1};
    std::size_t faults = 0;
};

/// Every distinct faulty episode plus as many non-faulty episodes drawn from
/// `pool`, encoded over an index built from their own states.
RuleDataset build_rule_dataset(std::span<const Episode> faults, std::span<const Episode> pool,
                               const QNetwork& agent, AbstractionLevel d, Rng& rng);

struct Rq3Report {
    std::size_t rows = 0;
    std::size_t features = 0;
    KFoldReport cv;
    std::vector<Rule> rules;       ///< from a tree fit on all rows
    bool rules_match_tree = false; ///< rules as a classifier reproduce the tree on every row
};

Rq3Report run_rq3(const RuleDataset& rules, std::size_t folds, const TreeParams& params, std::uint64_t seed);

} // namespace starla
