#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brt/geometry.hpp"
#include "brt/measure.hpp"

namespace brt {

enum class NodeKind { split, empty_leaf, bad_leaf };

// One node of the probability-split tree. Vertical nodes (even depth) remove
// a vertical strip, horizontal nodes a horizontal one. Leaves use the
// convention strip == region.
struct PrimaryNode {
    Region region;
    Region strip;
    Axis axis = Axis::vertical;
    int depth = 0;
    NodeKind kind = NodeKind::empty_leaf;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::int32_t parent = -1;
    bool is_left_child = false;
    double region_prob = 0.0;
    double strip_prob = 0.0;
    std::vector<std::uint32_t> pts_by_x; // points of S in region, sorted by x
    std::vector<std::uint32_t> pts_by_y;
    // Native catalogue of THIS node (assigned when it is a left child):
    // points of parent's strip ∪ right sibling's region, sorted by the
    // catalogue axis. Horizontal parent -> x-catalogue, vertical parent ->
    // y-catalogue.
    std::vector<std::uint32_t> native_catalogue;
};

struct StripChoice {
    Region strip;
    double strip_prob = 0.0;
    int piece_index = 0; // 0-based; pieces 0..k-1 carry one point each, piece k none
};

// Partition region into k+1 strips along axis by lines through the given
// sorted distinct coordinates; each strip open on its left (bottom) side and
// closed on its right (top) side.
std::vector<Region> split_into_strips(const Region& region, const std::vector<double>& coords, Axis axis);

// The paper's strip rule: the unique strip whose prefix mass is <= Pr(region)/2
// and suffix mass < Pr(region)/2. When the region carries zero probability the
// strip containing the median coordinate is returned so point counts stay
// balanced.
StripChoice choose_strip(const Region& region, const std::vector<double>& coords, const Measure& m,
                         Axis axis);

struct LocateNode {
    std::int32_t node = 0;
    int comparisons = 0;
};

class PrimaryTree {
public:
    PrimaryTree() = default;

    // points must have pairwise-distinct x and pairwise-distinct y.
    static PrimaryTree build(const std::vector<Point>& points, const Measure& m);

    // Step 1 of the query: the unique node v with q in s(v). At most 2
    // comparisons per split node on the descent.
    LocateNode locate_strip_node(const Point& q) const;

    const std::vector<PrimaryNode>& nodes() const { return nodes_; }
    std::vector<PrimaryNode>& nodes_mutable() { return nodes_; } // audits/tests only
    const PrimaryNode& node(std::int32_t i) const { return nodes_[i]; }
    std::int32_t root() const { return 0; }
    const std::vector<Point>& points() const { return points_; }
    int depth_cap() const { return depth_cap_; }
    long long build_comparisons() const { return build_comparisons_; }

    // Pre-order dump (depth, axis, strip bounds, region probability).
    std::string dump_json() const;

private:
    std::vector<PrimaryNode> nodes_;
    std::vector<Point> points_;
    int depth_cap_ = 0;
    long long build_comparisons_ = 0;
};

} // namespace brt
