#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace starla {

/// Binary presence/absence vector of length `size()`, stored as the sorted
/// list of set positions (episodes touch few of the known abstract states).
class FeatureVector {
public:
    FeatureVector() = default;
    explicit FeatureVector(std::size_t size) : size_(size) {}

    static FeatureVector from_dense(std::span<const int> bits);
    static FeatureVector from_active(std::size_t size, std::vector<std::uint32_t> active);

    std::size_t size() const { return size_; }
    bool operator[](std::size_t i) const;
    void set(std::size_t i);
    const std::vector<std::uint32_t>& active() const { return active_; }
    std::vector<std::uint8_t> dense() const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint32_t> active_;
};

} // namespace starla
