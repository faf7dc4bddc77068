#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "brt/backup_tree.hpp"
#include "brt/catalogues.hpp"
#include "brt/measure.hpp"
#include "brt/primary_tree.hpp"

namespace brt {

struct QueryResult {
    int count = 0;
    std::optional<double> aggregate; // present when built with a monoid
    int comparisons = 0;
    int path_depth = 0;
    bool used_backup = false;
};

struct BuildStats {
    long long build_comparisons = 0;
    long long total_space_entries = 0; // catalogue entries incl. cascades + backup lists
};

// The assembled structure: primary tree + catalogues + backup tree.
// Queries run the three-step algorithm: locate the strip node, then either
// fall back to the backup tree (bad leaf) or locate in the start node's
// catalogues and walk to the root. A "comparison" is one coordinate-vs-value
// order test, counted identically in every structure.
class BiasedRangeTree {
public:
    BiasedRangeTree() = default;

    // points need pairwise-distinct x and pairwise-distinct y; m must
    // validate. The monoid, when given, adds aggregate answers.
    static BiasedRangeTree build(const std::vector<Point>& points, const Measure& m,
                                 const MonoidSpec* monoid = nullptr);

    QueryResult count(const Point& q) const;
    // Same, also collecting the contributing native point indices (debug).
    QueryResult count_audited(const Point& q, std::vector<std::uint32_t>& contributing) const;

    // Mean comparisons per query under eval. Exact enumeration of atoms
    // (requires a discrete measure) or deterministic Monte Carlo.
    double expected_cost_exact(const Measure& eval) const;
    double expected_cost_monte_carlo(const Measure& eval, int num_queries, std::uint64_t seed) const;

    const PrimaryTree& primary() const { return *primary_; }
    const CatalogueSet& catalogues() const { return *catalogues_; }
    CatalogueSet& catalogues_mutable() { return *catalogues_; } // tests only
    const BackupTree& backup() const { return *backup_; }
    const Measure& measure() const { return measure_; }
    const BuildStats& stats() const { return stats_; }
    std::size_t size() const { return primary_->points().size(); }

private:
    std::shared_ptr<PrimaryTree> primary_;
    std::shared_ptr<CatalogueSet> catalogues_;
    std::shared_ptr<BackupTree> backup_;
    Measure measure_;
    BuildStats stats_;
};

} // namespace brt
