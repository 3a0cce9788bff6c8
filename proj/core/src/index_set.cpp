#include "curskel/index_set.hpp"

#include <stdexcept>
#include <string>

namespace curskel {

IndexSet::IndexSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) throw std::invalid_argument("index set must be nonempty");
}

IndexSet::IndexSet(std::initializer_list<std::size_t> indices)
    : IndexSet(std::vector<std::size_t>(indices)) {}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> zero_based;
    zero_based.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i == 0) throw std::out_of_range("external indices are 1-based; got 0");
        zero_based.push_back(i - 1);
    }
    return IndexSet(std::move(zero_based));
}

std::vector<std::size_t> IndexSet::to_one_based() const {
    std::vector<std::size_t> out;
    out.reserve(indices_.size());
    for (std::size_t i : indices_) out.push_back(i + 1);
    return out;
}

void IndexSet::validate_bound(std::size_t bound, const char* axis) const {
    for (std::size_t i : indices_) {
        if (i >= bound) {
            throw std::out_of_range(std::string(axis) + " index " + std::to_string(i + 1) +
                                    " out of range (1-based) for dimension " +
                                    std::to_string(bound));
        }
    }
}

}  // namespace curskel
