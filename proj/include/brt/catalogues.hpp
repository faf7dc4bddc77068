#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "brt/biased_bst.hpp"
#include "brt/measure.hpp"
#include "brt/primary_tree.hpp"

namespace brt {

// Commutative monoid over double; identity-bearing so empty suffixes have a
// value. Counting is the (0, +, 1) instance of the same mechanism.
struct MonoidSpec {
    double identity = 0.0;
    std::function<double(double, double)> combine;
    std::function<double(const Point&)> weight;
};

struct CatEntry {
    double key = 0.0;
    std::int32_t point = -1;           // point index for natives, -1 for cascaded
    std::uint32_t bridge_parent = 0;   // least parent-augmented pos with key >= this key
    std::uint32_t first_native = 0;    // least pos >= here holding a native entry
    std::uint32_t native_suffix = 0;   // native entries at pos >= here

    bool is_native() const { return point >= 0; }
};

struct Catalogue {
    std::vector<CatEntry> entries;   // sorted by key, keys pairwise distinct
    std::vector<double> suffix_agg;  // size entries+1 when a monoid is attached
    BiasedTree index;
    std::uint32_t native_count = 0;
};

struct WalkResult {
    int count = 0;
    double aggregate = 0.0;
    int comparisons = 0;
};

// Per-node catalogues C_x(v), C_y(v): native points assigned to left
// children, every-2nd-entry fractional cascading along root paths, suffix
// counts for the walk-up, and biased BST indexes weighted by the query
// distribution conditioned on the strip the search came from.
class CatalogueSet {
public:
    struct NodeCats {
        Catalogue x, y;
    };

    CatalogueSet() = default;

    // Cascade + suffix structure. Natives come from the primary tree's
    // assignment (left children hold parent's strip ∪ right sibling).
    void build_cascade(const PrimaryTree& tree, const MonoidSpec* monoid);

    // Biased indexes over the augmented keys. Left children are weighted by
    // D | s(parent(v)), everything else by D | s(v); zero-probability
    // conditioning events fall back to uniform weights.
    void build_indexes(const PrimaryTree& tree, const Measure& m);

    // Steps 2-3 of the query: locate q in u's two catalogues, then walk to
    // the root maintaining positions through bridges, summing native suffix
    // counts (and monoid suffixes). audit_points, when given, collects the
    // contributing native point indices.
    WalkResult walk_and_count(const PrimaryTree& tree, std::int32_t u, const Point& q,
                              std::vector<std::uint32_t>* audit_points = nullptr) const;

    const NodeCats& at(std::int32_t node) const { return per_node_[node]; }
    NodeCats& at_mutable(std::int32_t node) { return per_node_[node]; } // tests only
    std::size_t node_count() const { return per_node_.size(); }
    std::size_t total_entries() const;
    long long build_comparisons() const { return build_comparisons_; }
    bool has_monoid() const { return has_monoid_; }
    double monoid_identity() const { return identity_; }

private:
    std::vector<NodeCats> per_node_;
    std::function<double(double, double)> combine_;
    double identity_ = 0.0;
    bool has_monoid_ = false;
    long long build_comparisons_ = 0;
};

} // namespace brt
