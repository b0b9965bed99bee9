#pragma once

#include "starla/abstraction.hpp"
#include "starla/classifier.hpp"
#include "starla/environment.hpp"
#include "starla/episode.hpp"
#include "starla/network.hpp"
#include "starla/rng.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace starla {

/// Objective vector; every component is minimized.
struct Fitness {
    double reward = 0.0;    ///< accumulated reward of the episode
    double fault = 1.0;     ///< 1 - predicted fault probability
    double certainty = 0.0; ///< mean margin of the recorded action over the runner-up

    std::array<double, 3> values() const { return {reward, fault, certainty}; }
    friend bool operator==(const Fitness&, const Fitness&) = default;
};

inline constexpr std::size_t objective_count = 3;
using ObjectiveFlags = std::array<bool, objective_count>;

struct FitnessThresholds {
    double reward_max = 70.0;
    double fault_prob_min = 0.95;
    double certainty_max = 0.04;

    static FitnessThresholds defaults(EnvKind kind);
    void validate() const;
    ObjectiveFlags satisfied(const Fitness& f) const;
};

struct Individual {
    Episode episode;
    Fitness fitness;
    FeatureVector features;
    /// Abstract id of each step's state. Ids below the surrogate's index size
    /// are feature columns; larger ids are keys first seen during the search.
    std::vector<AbstractStateId> ids;
    std::size_t rank = 0;
    double crowding = 0.0;
};

double fitness_reward(const Episode& e);
double fitness_fault_prob(const FeatureVector& x, const FaultForest& forest);
double fitness_fault_prob(const Episode& e, const FaultForest& forest, const AbstractionIndex& index,
                          const QNetwork& agent);
double fitness_certainty(const Episode& e, const QNetwork& agent, double temperature);

/// Frozen surrogate index extended with keys first met during a search run,
/// so crossover can match states the surrogate has never seen.
class SearchKeyTable {
public:
    explicit SearchKeyTable(const AbstractionIndex& index) : index_(&index) {}

    const AbstractionIndex& index() const { return *index_; }
    AbstractStateId id_of(const AbstractKey& key);
    std::size_t extra_size() const { return extra_.size(); }

private:
    const AbstractionIndex* index_;
    std::unordered_map<AbstractKey, AbstractStateId, AbstractKeyHash> extra_;
};

/// Read-only models a search run consults.
struct SearchModels {
    const EnvironmentConfig* env = nullptr;
    const QNetwork* agent = nullptr;
    const FaultForest* forest = nullptr;
    const AbstractionIndex* index = nullptr;
};

/// What must cover every objective for the search to stop early: the
/// offspring of the current generation, or the whole archive (initial
/// population included, so a population that already covers all objectives
/// ends the search before the first generation).
enum class StopRule { offspring, archive };

std::string_view to_string(StopRule r);
StopRule stop_rule_from_string(std::string_view name);

struct SearchConfig {
    std::size_t generations = 10;
    StopRule stop_rule = StopRule::offspring;
    double crossover_rate = 0.75;
    /// Crossover attempts per generation, each taken with probability
    /// `crossover_rate`; population-sized offspring sets need |P|/2.
    std::size_t crossovers_per_generation = 1;
    std::size_t mutations_per_generation = 1;
    std::size_t tournament_size = 2;
    std::size_t match_retries = 50;
    double temperature = 1.0;
    std::vector<double> perturbation; ///< empty = environment defaults
    std::uint64_t seed = 1;

    void validate() const;
};

/// Fills ids, features and fitness. The OpenMP version spreads individuals
/// over threads; ids are assigned afterwards in index order.
void evaluate_population(std::span<Individual> pop, const SearchModels& models, SearchKeyTable& keys,
                         double temperature);
void evaluate_population_serial(std::span<Individual> pop, const SearchModels& models, SearchKeyTable& keys,
                                double temperature);

bool dominates(const Fitness& a, const Fitness& b);

/// Per-objective minimizers get rank 0; the rest are sorted into
/// non-dominated fronts numbered from 1. Crowding distances are per front.
void mosa_rank(std::span<Individual> pop);

/// Standard crowding distance of the given members; extremes get infinity.
std::vector<double> crowding_distances(std::span<const Fitness> front);

std::size_t tournament_select(std::span<const Individual> pop, std::size_t k, Rng& rng);

/// A = parent[0..f) ++ match[v..), B = match[0..v) ++ parent[f..).
std::pair<Episode, Episode> splice(const Episode& parent, std::size_t f, const Episode& match, std::size_t v);

struct CrossoverResult {
    Episode first;
    Episode second;
    std::size_t parent = 0;
    std::size_t match = 0;
    std::size_t parent_point = 0;
    std::size_t match_point = 0;
};

/// Matches a tournament-selected parent's random step with an equal abstract
/// id elsewhere in the population. Offspring longer than max_steps are not
/// formed. Returns nothing after `retries` failed attempts.
std::optional<CrossoverResult> crossover(std::span<const Individual> pop, std::size_t tournament_size,
                                         std::size_t retries, int max_steps, Rng& rng);

/// Perturbs a uniformly chosen step's state and re-executes the agent from it.
Episode mutate(const Episode& e, const QNetwork& agent, const EnvironmentConfig& env,
               std::span<const double> magnitudes, Rng& rng);

struct ArchiveEntry {
    Individual individual;
    ObjectiveFlags satisfied{};
    std::size_t generation = 0; ///< 0 = initial population
};

/// Hash of an episode's step sequence (states bitwise, actions, rewards).
std::uint64_t content_hash(const Episode& e);

/// Append-only set of individuals that satisfied at least one threshold.
/// Duplicates are rejected by id and by identical step sequence.
class Archive {
public:
    bool add(const Individual& ind, const ObjectiveFlags& satisfied, std::size_t generation);
    bool contains(std::uint64_t id) const;
    std::size_t size() const { return entries_.size(); }
    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::vector<ArchiveEntry>& entries() { return entries_; }
    ObjectiveFlags covered() const;

private:
    std::vector<ArchiveEntry> entries_;
    std::unordered_map<std::uint64_t, std::size_t> by_id_;
    std::unordered_multimap<std::uint64_t, std::size_t> by_content_;
};

/// Adds every individual satisfying some threshold; returns how many were new.
std::size_t update_archive(Archive& archive, std::span<const Individual> pop, const FitnessThresholds& thresholds,
                           std::size_t generation);

/// Elitist replacement: best MOSA fronts of parents and offspring, the last
/// admitted front ordered by crowding distance.
std::vector<Individual> select_next(std::vector<Individual> parents, std::vector<Individual> offspring);

struct RunMetrics {
    std::size_t generations = 0;
    std::vector<std::size_t> archive_sizes; ///< after the initial population, then after each generation
    std::size_t mutations = 0;              ///< executed mutated episodes
    std::size_t crossovers = 0;             ///< successful crossovers
    std::size_t crossover_failures = 0;
    bool all_satisfied = false;
};

struct SearchResult {
    Archive archive;
    RunMetrics metrics;
    std::vector<Individual> population;
};

SearchResult run_search(const SearchConfig& config, const FitnessThresholds& thresholds,
                        std::vector<Episode> initial, const SearchModels& models);

} // namespace starla
