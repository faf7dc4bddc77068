#include "brt/biased_range_tree.hpp"

#include <stdexcept>

#include "brt/rng.hpp"

namespace brt {

BiasedRangeTree BiasedRangeTree::build(const std::vector<Point>& points, const Measure& m,
                                       const MonoidSpec* monoid) {
    ValidationResult v = m.validate();
    if (!v.ok) throw std::invalid_argument("invalid measure: " + v.issue);

    BiasedRangeTree t;
    t.measure_ = m;
    t.primary_ = std::make_shared<PrimaryTree>(PrimaryTree::build(points, m));
    t.catalogues_ = std::make_shared<CatalogueSet>();
    t.catalogues_->build_cascade(*t.primary_, monoid);
    t.catalogues_->build_indexes(*t.primary_, m);
    if (monoid) {
        std::vector<double> weights;
        weights.reserve(points.size());
        for (const auto& p : points) weights.push_back(monoid->weight(p));
        t.backup_ = std::make_shared<BackupTree>(
            BackupTree::build(points, weights, monoid->identity, monoid->combine));
    } else {
        t.backup_ = std::make_shared<BackupTree>(BackupTree::build(points));
    }
    t.stats_.build_comparisons = t.primary_->build_comparisons() + t.catalogues_->build_comparisons() +
                                 t.backup_->build_comparisons();
    t.stats_.total_space_entries = static_cast<long long>(t.catalogues_->total_entries()) +
                                   static_cast<long long>(t.backup_->total_entries());
    return t;
}

QueryResult BiasedRangeTree::count(const Point& q) const {
    std::vector<std::uint32_t>* no_audit = nullptr;
    LocateNode loc = primary_->locate_strip_node(q);
    const PrimaryNode& v = primary_->node(loc.node);

    QueryResult res;
    res.path_depth = v.depth;
    res.comparisons = loc.comparisons;

    if (v.kind == NodeKind::bad_leaf) {
        BackupCount bc = backup_->count(q);
        res.count = bc.count;
        res.comparisons += bc.comparisons;
        res.used_backup = true;
        if (catalogues_->has_monoid()) res.aggregate = bc.aggregate;
        return res;
    }

    std::int32_t u = (v.kind == NodeKind::split) ? v.left : loc.node;
    WalkResult w = catalogues_->walk_and_count(*primary_, u, q, no_audit);
    res.count = w.count;
    res.comparisons += w.comparisons;
    if (catalogues_->has_monoid()) res.aggregate = w.aggregate;
    return res;
}

QueryResult BiasedRangeTree::count_audited(const Point& q, std::vector<std::uint32_t>& contributing) const {
    contributing.clear();
    LocateNode loc = primary_->locate_strip_node(q);
    const PrimaryNode& v = primary_->node(loc.node);

    QueryResult res;
    res.path_depth = v.depth;
    res.comparisons = loc.comparisons;

    if (v.kind == NodeKind::bad_leaf) {
        BackupCount bc = backup_->count(q);
        res.count = bc.count;
        res.comparisons += bc.comparisons;
        res.used_backup = true;
        if (catalogues_->has_monoid()) res.aggregate = bc.aggregate;
        return res;
    }

    std::int32_t u = (v.kind == NodeKind::split) ? v.left : loc.node;
    WalkResult w = catalogues_->walk_and_count(*primary_, u, q, &contributing);
    res.count = w.count;
    res.comparisons += w.comparisons;
    if (catalogues_->has_monoid()) res.aggregate = w.aggregate;
    return res;
}

double BiasedRangeTree::expected_cost_exact(const Measure& eval) const {
    if (!eval.is_discrete())
        throw std::invalid_argument("expected_cost_exact requires a discrete measure");
    double total = 0.0, mass = 0.0;
    for (const auto& a : eval.discrete().atoms) {
        total += a.mass * count(a.p).comparisons;
        mass += a.mass;
    }
    return mass > 0.0 ? total / mass : 0.0;
}

double BiasedRangeTree::expected_cost_monte_carlo(const Measure& eval, int num_queries,
                                                  std::uint64_t seed) const {
    if (num_queries <= 0) throw std::invalid_argument("expected_cost_monte_carlo: num_queries must be > 0");
    double total = 0.0;
    for (int i = 0; i < num_queries; ++i)
        total += count(eval.sample(seed, static_cast<std::uint64_t>(i))).comparisons;
    return total / num_queries;
}

} // namespace brt
