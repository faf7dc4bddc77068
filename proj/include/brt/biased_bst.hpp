#pragma once

#include <cstdint>
#include <vector>

namespace brt {

// n sorted keys split the line into n+1 half-open intervals
// (k[i-1], k[i]] with sentinels -inf, +inf; weights[i] is the access weight
// of interval i.
struct WeightedIntervals {
    std::vector<double> keys;    // strictly increasing
    std::vector<double> weights; // size keys.size() + 1, nonnegative, sum > 0
};

struct LocateResult {
    int interval = 0;    // index of the half-open interval containing q
    int comparisons = 0; // key comparisons performed
};

// Weight-balanced search tree over the keys. Built by recursive bisection
// (the cut minimizing the heavier side), after flooring each weight at
// W/(n+1)^2 so that no interval can sink below depth ~2*log2(n+1) even
// when its true probability is 0. Interval i then sits at depth at most
// log2(1/p'_i) + 2 where p' are the floored, renormalized weights.
class BiasedTree {
public:
    BiasedTree() = default;

    LocateResult locate(double q) const;

    // Number of keys at positions >= interval_index, i.e. the size of the
    // 1-sided range to the right of any point interior to that interval.
    int count_geq(int interval_index) const;

    int key_count() const { return static_cast<int>(keys_.size()); }
    bool empty() const { return keys_.empty(); }

    // Comparison depth of the leaf slot of interval i (0 for an empty tree).
    int depth_of_interval(int interval_index) const;
    int max_depth() const;

    // In-order key check plus subtree counts; used by audits.
    bool structurally_valid() const;

    friend BiasedTree build_biased(const WeightedIntervals& wi);

private:
    struct Node {
        double key = 0.0;
        std::int32_t left = 0;  // child index, or ~interval for a leaf slot
        std::int32_t right = 0;
        std::int32_t subtree_keys = 1;
    };

    std::vector<Node> nodes_;
    std::vector<double> keys_;
    std::int32_t root_ = -1;
};

BiasedTree build_biased(const WeightedIntervals& wi);

} // namespace brt
