#include "brt/catalogues.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace brt {
namespace {

double key_of(const Point& p, Axis cat_axis) { return cat_axis == Axis::vertical ? p.x : p.y; }

// cat_axis here names the coordinate the catalogue is sorted by:
// vertical = x-catalogue, horizontal = y-catalogue.
Axis native_axis_for(const PrimaryTree& tree, std::int32_t node) {
    const PrimaryNode& nd = tree.node(node);
    if (nd.parent < 0 || !nd.is_left_child) return Axis::vertical; // unused: natives empty
    // Horizontal parent feeds C_x(left), vertical parent feeds C_y(left).
    return tree.node(nd.parent).axis == Axis::horizontal ? Axis::vertical : Axis::horizontal;
}

} // namespace

void CatalogueSet::build_cascade(const PrimaryTree& tree, const MonoidSpec* monoid) {
    const auto& nodes = tree.nodes();
    const auto& points = tree.points();
    per_node_.assign(nodes.size(), {});
    has_monoid_ = monoid != nullptr;
    if (has_monoid_) {
        identity_ = monoid->identity;
        combine_ = monoid->combine;
    }

    // Nodes are stored in pre-order, so every parent is processed first.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const PrimaryNode& nd = nodes[i];
        const bool has_native = nd.parent >= 0 && nd.is_left_child && !nd.native_catalogue.empty();
        const Axis native_axis = native_axis_for(tree, static_cast<std::int32_t>(i));

        for (Axis axis : {Axis::vertical, Axis::horizontal}) {
            Catalogue& cat = (axis == Axis::vertical) ? per_node_[i].x : per_node_[i].y;
            const Catalogue* parent_cat = nullptr;
            if (nd.parent >= 0)
                parent_cat = (axis == Axis::vertical) ? &per_node_[nd.parent].x : &per_node_[nd.parent].y;

            // Cascaded keys: every 2nd entry of the parent's augmented list.
            std::vector<double> cascaded;
            if (parent_cat)
                for (std::size_t j = 1; j < parent_cat->entries.size(); j += 2)
                    cascaded.push_back(parent_cat->entries[j].key);

            const std::vector<std::uint32_t>* natives =
                (has_native && axis == native_axis) ? &nd.native_catalogue : nullptr;

            std::size_t na = natives ? natives->size() : 0;
            cat.entries.reserve(na + cascaded.size());
            cat.native_count = static_cast<std::uint32_t>(na);
            std::size_t a = 0, b = 0;
            while (a < na || b < cascaded.size()) {
                bool take_native;
                if (a == na)
                    take_native = false;
                else if (b == cascaded.size())
                    take_native = true;
                else {
                    ++build_comparisons_;
                    take_native = key_of(points[(*natives)[a]], axis) < cascaded[b];
                }
                CatEntry e;
                if (take_native) {
                    e.point = static_cast<std::int32_t>((*natives)[a]);
                    e.key = key_of(points[(*natives)[a]], axis);
                    ++a;
                } else {
                    e.key = cascaded[b];
                    ++b;
                }
                cat.entries.push_back(e);
            }

            // Path catalogues are disjoint point sets with globally distinct
            // coordinates, so augmented keys never collide.
            for (std::size_t j = 1; j < cat.entries.size(); ++j)
                assert(cat.entries[j].key > cat.entries[j - 1].key);

            // Bridges into the parent's augmented list.
            if (parent_cat) {
                std::size_t pj = 0;
                for (auto& e : cat.entries) {
                    while (pj < parent_cat->entries.size() && parent_cat->entries[pj].key < e.key) ++pj;
                    e.bridge_parent = static_cast<std::uint32_t>(pj);
                }
            }

            // Suffix structure for counting during the walk.
            std::uint32_t suffix = 0;
            std::uint32_t first_nat = static_cast<std::uint32_t>(cat.entries.size());
            if (has_monoid_) cat.suffix_agg.assign(cat.entries.size() + 1, identity_);
            for (std::size_t j = cat.entries.size(); j-- > 0;) {
                if (has_monoid_)
                    cat.suffix_agg[j] = cat.entries[j].is_native()
                                            ? combine_(monoid->weight(points[cat.entries[j].point]),
                                                       cat.suffix_agg[j + 1])
                                            : cat.suffix_agg[j + 1];
                if (cat.entries[j].is_native()) {
                    ++suffix;
                    first_nat = static_cast<std::uint32_t>(j);
                }
                cat.entries[j].native_suffix = suffix;
                cat.entries[j].first_native = first_nat;
            }
        }
    }
}

void CatalogueSet::build_indexes(const PrimaryTree& tree, const Measure& m) {
    const auto& nodes = tree.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const PrimaryNode& nd = nodes[i];
        const Region& cond =
            (nd.parent >= 0 && nd.is_left_child) ? tree.node(nd.parent).strip : nd.strip;
        const double cond_prob = m.prob(cond);

        for (Axis axis : {Axis::vertical, Axis::horizontal}) {
            Catalogue& cat = (axis == Axis::vertical) ? per_node_[i].x : per_node_[i].y;
            WeightedIntervals wi;
            wi.keys.reserve(cat.entries.size());
            for (const auto& e : cat.entries) wi.keys.push_back(e.key);
            wi.weights.assign(wi.keys.size() + 1, 1.0);
            if (cond_prob > 0.0) {
                double lo = -kInf;
                for (std::size_t k = 0; k <= wi.keys.size(); ++k) {
                    double hi = k < wi.keys.size() ? wi.keys[k] : kInf;
                    Region slab = Region::plane();
                    slab.along(axis) = Interval{lo, hi, false, hi != kInf};
                    wi.weights[k] = m.conditional(slab, cond);
                    lo = hi;
                }
                double sum = 0.0;
                for (double w : wi.weights) sum += w;
                if (!(sum > 0.0)) wi.weights.assign(wi.keys.size() + 1, 1.0);
            }
            cat.index = build_biased(wi);
        }
    }
}

WalkResult CatalogueSet::walk_and_count(const PrimaryTree& tree, std::int32_t u, const Point& q,
                                        std::vector<std::uint32_t>* audit_points) const {
    WalkResult res;
    res.aggregate = identity_;

    const NodeCats& ucat = per_node_[u];
    LocateResult lx = ucat.x.index.locate(q.x);
    LocateResult ly = ucat.y.index.locate(q.y);
    res.comparisons += lx.comparisons + ly.comparisons;

    std::uint32_t pos_x = static_cast<std::uint32_t>(lx.interval);
    std::uint32_t pos_y = static_cast<std::uint32_t>(ly.interval);

    std::int32_t node = u;
    while (node >= 0) {
        const NodeCats& cats = per_node_[node];
        auto absorb = [&](const Catalogue& cat, std::uint32_t pos) {
            if (pos < cat.entries.size()) {
                res.count += static_cast<int>(cat.entries[pos].native_suffix);
                if (has_monoid_) res.aggregate = combine_(res.aggregate, cat.suffix_agg[pos]);
                if (audit_points)
                    for (std::uint32_t j = cat.entries[pos].first_native; j < cat.entries.size(); ++j)
                        if (cat.entries[j].is_native())
                            audit_points->push_back(static_cast<std::uint32_t>(cat.entries[j].point));
            }
        };
        absorb(cats.x, pos_x);
        absorb(cats.y, pos_y);

        std::int32_t parent = tree.node(node).parent;
        if (parent < 0) break;
        const NodeCats& pcats = per_node_[parent];
        auto lift = [&](const Catalogue& child, const Catalogue& par, std::uint32_t pos,
                        double coord) -> std::uint32_t {
            std::uint32_t b = pos < child.entries.size() ? child.entries[pos].bridge_parent
                                                         : static_cast<std::uint32_t>(par.entries.size());
            // Entries skipped by the every-2nd sampling never sit adjacent in
            // the parent list, so this walks back at most one slot.
            while (b > 0) {
                ++res.comparisons;
                if (par.entries[b - 1].key >= coord)
                    --b;
                else
                    break;
            }
            return b;
        };
        pos_x = lift(cats.x, pcats.x, pos_x, q.x);
        pos_y = lift(cats.y, pcats.y, pos_y, q.y);
        node = parent;
    }
    return res;
}

std::size_t CatalogueSet::total_entries() const {
    std::size_t total = 0;
    for (const auto& nc : per_node_) total += nc.x.entries.size() + nc.y.entries.size();
    return total;
}

} // namespace brt
