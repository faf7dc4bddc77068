#pragma once

#include <cstdint>
#include <vector>

#include "brt/primary_tree.hpp"

namespace brt {

// Benchmark baseline, not part of the main structure: descends the primary
// tree without catalogues, resolving partially-overlapped nodes by recursion
// and checking strip points linearly. Shows what the catalogues buy.
class KdBaseline {
public:
    KdBaseline() = default;
    explicit KdBaseline(std::shared_ptr<const PrimaryTree> tree);

    struct Result {
        int count = 0;
        int comparisons = 0;
    };
    Result count(const Point& q) const;

    std::size_t total_entries() const { return total_entries_; }

private:
    std::shared_ptr<const PrimaryTree> tree_;
    std::vector<std::vector<std::uint32_t>> strip_pts_; // per node: points inside s(v)
    std::size_t total_entries_ = 0;
};

} // namespace brt
