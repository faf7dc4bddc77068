#include "brt/audit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "brt/oracle.hpp"
#include "brt/rng.hpp"

namespace brt {
namespace {

std::string node_tag(std::int32_t i, const PrimaryNode& nd) {
    std::ostringstream s;
    s << "node " << i << " (depth " << nd.depth << ")";
    return s.str();
}

} // namespace

AuditReport audit_structure(const BiasedRangeTree& t) {
    AuditReport rep;
    const PrimaryTree& tree = t.primary();
    const auto& nodes = tree.nodes();
    const auto& pts = tree.points();
    const Measure& m = t.measure();
    const int cap = tree.depth_cap();

    std::size_t native_total = 0;

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const PrimaryNode& nd = nodes[i];
        ++rep.checks;

        // Property 1: Pr(s(v)) <= Pr(r(v)) <= 2^-depth.
        if (nd.strip_prob > nd.region_prob + 1e-9)
            rep.fail(node_tag(i, nd) + ": strip probability exceeds region probability");
        if (nd.region_prob > std::pow(0.5, nd.depth) + 1e-9)
            rep.fail(node_tag(i, nd) + ": region probability exceeds 2^-depth");

        // Property 2: positive probability => a point of S in the closure.
        if (i != 0 && nd.region_prob > 0.0 && nd.pts_by_x.empty()) {
            Region cl = nd.region.closure();
            bool found = false;
            for (const auto& p : pts)
                if (cl.contains(p)) {
                    found = true;
                    break;
                }
            if (!found) rep.fail(node_tag(i, nd) + ": positive probability but point-free closure");
        }

        if (nd.depth > cap) rep.fail(node_tag(i, nd) + ": deeper than the depth cap");
        if ((nd.axis == Axis::vertical) != (nd.depth % 2 == 0))
            rep.fail(node_tag(i, nd) + ": axis does not alternate with depth");

        switch (nd.kind) {
        case NodeKind::bad_leaf:
            if (nd.depth != cap) rep.fail(node_tag(i, nd) + ": bad leaf off the depth cap");
            if (nd.pts_by_x.empty()) rep.fail(node_tag(i, nd) + ": bad leaf without points");
            if (!(nd.strip == nd.region)) rep.fail(node_tag(i, nd) + ": leaf strip != region");
            break;
        case NodeKind::empty_leaf:
            if (!nd.pts_by_x.empty()) rep.fail(node_tag(i, nd) + ": empty leaf holding points");
            if (!(nd.strip == nd.region)) rep.fail(node_tag(i, nd) + ": leaf strip != region");
            break;
        case NodeKind::split: {
            if (nd.pts_by_x.empty()) rep.fail(node_tag(i, nd) + ": split node without points");
            if (nd.depth >= cap) rep.fail(node_tag(i, nd) + ": split node at the depth cap");
            if (nd.left < 0 || nd.right < 0) {
                rep.fail(node_tag(i, nd) + ": split node missing children");
                break;
            }
            auto [lr, rr] = remove_strip(nd.region, nd.strip, nd.axis);
            if (!(tree.node(nd.left).region == lr) || !(tree.node(nd.right).region == rr))
                rep.fail(node_tag(i, nd) + ": child regions do not match remove_strip");
            // Strip emptiness: no point strictly interior; any point inside
            // sits on the closed right boundary.
            const Interval& si = nd.strip.along(nd.axis);
            for (std::uint32_t pi : nd.pts_by_x) {
                double c = (nd.axis == Axis::vertical) ? pts[pi].x : pts[pi].y;
                if (si.contains(c) && c != si.hi)
                    rep.fail(node_tag(i, nd) + ": point interior to strip");
            }
            // Native catalogue of the left child is (s(v) ∪ r(right)) ∩ S in
            // catalogue-axis order.
            const PrimaryNode& left = tree.node(nd.left);
            std::vector<std::uint32_t> expect;
            const auto& order = (nd.axis == Axis::horizontal) ? nd.pts_by_x : nd.pts_by_y;
            for (std::uint32_t pi : order)
                if (nd.strip.contains(pts[pi]) || rr.contains(pts[pi])) expect.push_back(pi);
            if (expect != left.native_catalogue)
                rep.fail(node_tag(i, nd) + ": left child's native catalogue mismatches its definition");
            break;
        }
        }
    }

    // Exactly one strip contains any query point.
    {
        SplitMix64 rng(0x5eedau);
        std::vector<Point> probes;
        for (int k = 0; k < 64; ++k) probes.push_back(m.sample(7777, k));
        for (int k = 0; k < 64; ++k)
            probes.push_back({rng.next_double() * 20.0 - 10.0, rng.next_double() * 20.0 - 10.0});
        for (std::uint32_t pi = 0; pi < pts.size() && pi < 32; ++pi) probes.push_back(pts[pi]);
        for (const auto& q : probes) {
            ++rep.checks;
            int hits = 0;
            for (const auto& nd : nodes)
                if (nd.strip.contains(q)) ++hits;
            if (hits != 1) {
                std::ostringstream s;
                s << "point (" << q.x << ", " << q.y << ") contained in " << hits << " strips";
                rep.fail(s.str());
            }
        }
    }

    // Catalogue structure: cascaded entries are every 2nd parent entry,
    // bridges and suffix fields agree with a direct scan.
    const CatalogueSet& cats = t.catalogues();
    std::size_t aug_total = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (Axis axis : {Axis::vertical, Axis::horizontal}) {
            const Catalogue& cat = axis == Axis::vertical ? cats.at(static_cast<std::int32_t>(i)).x
                                                          : cats.at(static_cast<std::int32_t>(i)).y;
            aug_total += cat.entries.size();
            ++rep.checks;
            const Catalogue* parent = nullptr;
            if (nodes[i].parent >= 0)
                parent = axis == Axis::vertical ? &cats.at(nodes[i].parent).x : &cats.at(nodes[i].parent).y;

            std::vector<double> cascaded;
            for (const auto& e : cat.entries)
                if (!e.is_native()) cascaded.push_back(e.key);
            std::vector<double> expect;
            if (parent)
                for (std::size_t j = 1; j < parent->entries.size(); j += 2)
                    expect.push_back(parent->entries[j].key);
            if (cascaded != expect)
                rep.fail(node_tag(i, nodes[i]) + ": cascaded entries are not every 2nd parent entry");

            std::uint32_t natives = 0;
            for (std::size_t j = 0; j < cat.entries.size(); ++j) {
                const CatEntry& e = cat.entries[j];
                if (j > 0 && !(e.key > cat.entries[j - 1].key))
                    rep.fail(node_tag(i, nodes[i]) + ": catalogue keys not strictly increasing");
                if (parent) {
                    std::size_t b = 0;
                    while (b < parent->entries.size() && parent->entries[b].key < e.key) ++b;
                    if (e.bridge_parent != b)
                        rep.fail(node_tag(i, nodes[i]) + ": bridge disagrees with linear scan");
                }
            }
            std::uint32_t suffix = 0;
            std::uint32_t first_nat = static_cast<std::uint32_t>(cat.entries.size());
            for (std::size_t j = cat.entries.size(); j-- > 0;) {
                if (cat.entries[j].is_native()) {
                    ++suffix;
                    first_nat = static_cast<std::uint32_t>(j);
                    ++natives;
                }
                if (cat.entries[j].native_suffix != suffix || cat.entries[j].first_native != first_nat)
                    rep.fail(node_tag(i, nodes[i]) + ": suffix fields disagree with scan");
            }
            if (natives != cat.native_count)
                rep.fail(node_tag(i, nodes[i]) + ": native count mismatch");
            if (!cat.index.structurally_valid() ||
                cat.index.key_count() != static_cast<int>(cat.entries.size()))
                rep.fail(node_tag(i, nodes[i]) + ": biased index invalid");
            native_total += natives;
        }
    }

    const std::size_t n = pts.size();
    if (native_total > 2 * n * static_cast<std::size_t>(cap + 1))
        rep.fail("native catalogue sizes exceed 2*n*(depth_cap+1)");
    if (n >= 1) {
        double logn = std::log2(static_cast<double>(n) + 2.0);
        if (static_cast<double>(aug_total) > 8.0 * static_cast<double>(n) * logn)
            rep.fail("augmented catalogue sizes exceed 8*n*log2(n+2)");
        if (static_cast<double>(t.stats().total_space_entries) > 16.0 * static_cast<double>(n) * logn)
            rep.fail("total space entries exceed 16*n*log2(n+2)");
    }
    return rep;
}

std::vector<Point> make_audit_queries(const BiasedRangeTree& t, int count, std::uint64_t seed) {
    const auto& pts = t.primary().points();
    std::vector<Point> qs;
    qs.reserve(count);
    int half = count / 2;
    for (int i = 0; i < half; ++i) qs.push_back(t.measure().sample(seed, i));
    SplitMix64 rng(mix_seed(seed, 0xadu));
    while (static_cast<int>(qs.size()) < count) {
        if (pts.empty()) {
            qs.push_back({rng.next_double() * 4.0 - 2.0, rng.next_double() * 4.0 - 2.0});
            continue;
        }
        const Point& a = pts[rng.next_below(pts.size())];
        const Point& b = pts[rng.next_below(pts.size())];
        switch (rng.next_below(4)) {
        case 0: qs.push_back(a); break; // exact coordinates
        case 1: qs.push_back({a.x, b.y}); break;
        case 2:
            qs.push_back({a.x + (rng.next_double() - 0.5) * 1e-6, b.y + (rng.next_double() - 0.5) * 1e-6});
            break;
        default:
            qs.push_back({a.x + (rng.next_double() - 0.5) * 4.0, b.y + (rng.next_double() - 0.5) * 4.0});
            break;
        }
    }
    return qs;
}

AuditReport audit_queries(const BiasedRangeTree& t, const std::vector<Point>& queries) {
    AuditReport rep;
    const PrimaryTree& tree = t.primary();
    const auto& pts = tree.points();
    const CatalogueSet& cats = t.catalogues();
    const std::size_t n = pts.size();

    std::vector<std::uint32_t> contributing;
    for (const auto& q : queries) {
        ++rep.checks;
        QueryResult r = t.count_audited(q, contributing);
        const int expect = brute_count(pts, q);
        std::ostringstream tag;
        tag << "query (" << q.x << ", " << q.y << ")";
        if (r.count != expect) {
            rep.fail(tag.str() + ": count mismatch vs brute force");
            continue;
        }

        if (r.used_backup) {
            double bound = 4.0 * std::log2(static_cast<double>(n) + 2.0) + 8.0 + 2.0 * (tree.depth_cap() + 1);
            if (r.comparisons > bound) rep.fail(tag.str() + ": backup query over comparison budget");
            continue;
        }

        // Recover the path u..root that the walk used.
        LocateNode loc = tree.locate_strip_node(q);
        const PrimaryNode& v = tree.node(loc.node);
        std::int32_t u = (v.kind == NodeKind::split) ? v.left : loc.node;

        std::vector<std::uint32_t> path_natives;
        int path_len = 0;
        for (std::int32_t w = u; w >= 0; w = tree.node(w).parent) {
            ++path_len;
            const auto& nc = cats.at(w);
            for (const auto& e : nc.x.entries)
                if (e.is_native()) {
                    path_natives.push_back(e.point);
                    // Property 1: x-catalogue points lie above q.
                    if (pts[e.point].y < q.y)
                        rep.fail(tag.str() + ": x-catalogue native below the query");
                }
            for (const auto& e : nc.y.entries)
                if (e.is_native()) {
                    path_natives.push_back(e.point);
                    if (pts[e.point].x < q.x)
                        rep.fail(tag.str() + ": y-catalogue native left of the query");
                }
        }

        // Property 2: catalogues along the path are disjoint.
        std::sort(path_natives.begin(), path_natives.end());
        if (std::adjacent_find(path_natives.begin(), path_natives.end()) != path_natives.end())
            rep.fail(tag.str() + ": path catalogues are not disjoint");

        // Property 3: they cover the query range.
        for (std::uint32_t pi = 0; pi < pts.size(); ++pi)
            if (pts[pi].x >= q.x && pts[pi].y >= q.y &&
                !std::binary_search(path_natives.begin(), path_natives.end(), pi)) {
                rep.fail(tag.str() + ": query range not covered by path catalogues");
                break;
            }

        // The contributing set must be exactly the query range.
        std::sort(contributing.begin(), contributing.end());
        if (std::adjacent_find(contributing.begin(), contributing.end()) != contributing.end())
            rep.fail(tag.str() + ": a point contributed twice");
        if (static_cast<int>(contributing.size()) != expect)
            rep.fail(tag.str() + ": contributing set size != brute count");

        // Step 3 cascading budget: 4 comparisons per path node + setup.
        const auto& ucat = cats.at(u);
        int locate_comps = ucat.x.index.locate(q.x).comparisons + ucat.y.index.locate(q.y).comparisons;
        int walk_comps = r.comparisons - loc.comparisons - locate_comps;
        if (walk_comps > 4 * path_len + 4) rep.fail(tag.str() + ": walk over comparison budget");
    }
    return rep;
}

} // namespace brt
