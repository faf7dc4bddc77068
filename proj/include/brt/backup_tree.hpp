#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "brt/geometry.hpp"

namespace brt {

struct BackupCount {
    int count = 0;
    double aggregate = 0.0; // monoid value when the tree was built with one
    int comparisons = 0;
};

// Classic layered range tree on x with a full sorted y-list per node and
// parent->child bridges (fractional cascading), answering dominance counts
// |{p : p_x >= q_x, p_y >= q_y}| in O(log n) comparisons worst case: one
// binary search in the root list plus O(1) per level.
class BackupTree {
public:
    using Combine = std::function<double(double, double)>;

    BackupTree() = default;

    // Points must have pairwise-distinct x and pairwise-distinct y.
    // point_weights, when nonempty, attaches a commutative monoid value to
    // each point (aligned with `points`); suffix aggregates are then stored
    // next to the counts.
    static BackupTree build(const std::vector<Point>& points,
                            const std::vector<double>& point_weights = {},
                            double identity = 0.0, Combine combine = nullptr);

    BackupCount count(const Point& q) const;

    std::size_t size() const { return n_; }
    // Total stored y-list entries across all nodes (space accounting).
    std::size_t total_entries() const { return total_entries_; }
    // Comparator calls spent sorting during build.
    long long build_comparisons() const { return build_comparisons_; }

private:
    struct Node {
        std::int32_t left = -1, right = -1;
        double split_x = 0.0;             // min x of the right subtree
        std::vector<double> ys;           // sorted ascending
        std::vector<std::int32_t> bl, br; // bridges into children, size ys.size()+1
        std::vector<double> suffix_agg;   // optional, size ys.size()+1
    };

    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
    std::size_t n_ = 0;
    std::size_t total_entries_ = 0;
    long long build_comparisons_ = 0;
    bool has_monoid_ = false;
    double identity_ = 0.0;
    Combine combine_;
};

} // namespace brt
