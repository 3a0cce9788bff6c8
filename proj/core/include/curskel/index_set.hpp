#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace curskel {

/// Ordered multiset of 0-based row or column indices. Repeats are permitted;
/// emptiness is not. Bounds are checked against a dimension when the set is
/// applied, not at construction.
class IndexSet {
public:
    explicit IndexSet(std::vector<std::size_t> indices);
    IndexSet(std::initializer_list<std::size_t> indices);

    /// Converts 1-based external indices (as used by files and CLI flags).
    static IndexSet from_one_based(const std::vector<std::size_t>& indices);

    std::size_t size() const { return indices_.size(); }
    std::size_t operator[](std::size_t i) const { return indices_[i]; }
    const std::vector<std::size_t>& indices() const { return indices_; }
    std::vector<std::size_t> to_one_based() const;

    /// Throws std::out_of_range if any index is >= bound.
    void validate_bound(std::size_t bound, const char* axis) const;

    bool operator==(const IndexSet& other) const = default;

private:
    std::vector<std::size_t> indices_;
};

}  // namespace curskel
