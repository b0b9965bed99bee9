#pragma once

#include "starla/environment.hpp"
#include "starla/network.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <unordered_map>
#include <vector>

namespace starla {

/// Bucket width d of the Q-value discretization.
class AbstractionLevel {
public:
    explicit AbstractionLevel(double d);
    double value() const { return d_; }

private:
    double d_;
};

using AbstractKey = std::vector<std::int64_t>;
using AbstractStateId = std::int64_t;

/// Elementwise ceil(q_a / d).
AbstractKey abstract_key(std::span<const double> q, AbstractionLevel d);
AbstractKey abstract_key(const QNetwork& net, const State& s, AbstractionLevel d);

bool same_abstract(const State& s1, const State& s2, const QNetwork& net, AbstractionLevel d);

struct AbstractKeyHash {
    std::size_t operator()(const AbstractKey& key) const noexcept;
};

/// Key table assigning dense ids in first-seen order. Once frozen, lookups of
/// unseen keys return `unknown` instead of growing the table.
class AbstractionIndex {
public:
    static constexpr AbstractStateId unknown = -1;

    AbstractionIndex(AbstractionLevel d, std::size_t action_count);

    AbstractionLevel level() const { return d_; }
    std::size_t action_count() const { return action_count_; }
    std::size_t size() const { return keys_.size(); }
    bool frozen() const { return frozen_; }
    void freeze() { frozen_ = true; }
    const std::vector<AbstractKey>& keys() const { return keys_; }

    /// Id for `key`, inserting it if new. Throws StateError on a frozen index.
    AbstractStateId insert(const AbstractKey& key);
    AbstractStateId find(const AbstractKey& key) const;
    AbstractStateId lookup(const QNetwork& net, const State& s) const;

private:
    AbstractionLevel d_;
    std::size_t action_count_;
    std::vector<AbstractKey> keys_;
    std::unordered_map<AbstractKey, AbstractStateId, AbstractKeyHash> ids_;
    bool frozen_ = false;
};

/// Keys of many states. The OpenMP version splits the batch across threads;
/// the serial one is the reference it is tested against.
std::vector<AbstractKey> compute_keys(std::span<const State> states, const QNetwork& net, AbstractionLevel d);
std::vector<AbstractKey> compute_keys_serial(std::span<const State> states, const QNetwork& net, AbstractionLevel d);

/// Frozen index over `states` (ids in first-seen order).
AbstractionIndex build_index(std::span<const State> states, const QNetwork& net, AbstractionLevel d);
AbstractionIndex build_index_serial(std::span<const State> states, const QNetwork& net, AbstractionLevel d);

struct IndexFile {
    AbstractionIndex index;
    std::string config_hash;
    std::uint64_t seed = 0;
};

void save_index(const std::filesystem::path& path, const AbstractionIndex& index, const std::string& config_hash,
                std::uint64_t seed);
IndexFile load_index(const std::filesystem::path& path);

} // namespace starla
