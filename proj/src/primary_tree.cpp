#include "brt/primary_tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace brt {
namespace {

void check_distinct_coords(const std::vector<Point>& pts) {
    std::vector<double> xs, ys;
    xs.reserve(pts.size());
    ys.reserve(pts.size());
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (xs[i] == xs[i - 1]) {
            std::ostringstream m;
            m << "duplicate x coordinate " << xs[i];
            throw std::invalid_argument(m.str());
        }
        if (ys[i] == ys[i - 1]) {
            std::ostringstream m;
            m << "duplicate y coordinate " << ys[i];
            throw std::invalid_argument(m.str());
        }
    }
}

int ceil_log2(std::size_t n) {
    int d = 0;
    std::size_t v = 1;
    while (v < n) {
        v <<= 1;
        ++d;
    }
    return d;
}

} // namespace

std::vector<Region> split_into_strips(const Region& region, const std::vector<double>& coords, Axis axis) {
    const Interval& span = region.along(axis);
    std::vector<Region> pieces;
    pieces.reserve(coords.size() + 1);
    double lo = span.lo;
    bool lo_closed = span.lo_closed;
    for (double c : coords) {
        Region piece = region;
        piece.along(axis) = Interval{lo, c, lo_closed, true};
        pieces.push_back(piece);
        lo = c;
        lo_closed = false;
    }
    Region last = region;
    last.along(axis) = Interval{lo, span.hi, lo_closed, span.hi_closed};
    pieces.push_back(last);
    return pieces;
}

StripChoice choose_strip(const Region& region, const std::vector<double>& coords, const Measure& m,
                         Axis axis) {
    if (coords.empty()) throw std::invalid_argument("choose_strip: no points in region");
    auto pieces = split_into_strips(region, coords, axis);
    std::vector<double> probs(pieces.size());
    double total = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        probs[i] = m.prob(pieces[i]);
        total += probs[i];
    }
    StripChoice choice;
    if (total <= 0.0) {
        // Paper's rule is vacuous at zero mass; split at the median point so
        // subtree point counts stay balanced.
        choice.piece_index = static_cast<int>((coords.size() - 1) / 2);
    } else {
        double half = total / 2.0;
        double cum = 0.0;
        std::size_t i = 0;
        for (; i + 1 < pieces.size(); ++i) {
            cum += probs[i];
            if (cum > half) break;
        }
        choice.piece_index = static_cast<int>(i);
    }
    choice.strip = pieces[choice.piece_index];
    choice.strip_prob = probs[choice.piece_index];
    return choice;
}

PrimaryTree PrimaryTree::build(const std::vector<Point>& points, const Measure& m) {
    check_distinct_coords(points);
    PrimaryTree t;
    t.points_ = points;
    t.depth_cap_ = std::max(1, ceil_log2(std::max<std::size_t>(points.size(), 1)));

    // Presort once; children lists are produced by stable partition, so the
    // whole build does O(n log n) point moves.
    std::vector<std::uint32_t> by_x(points.size()), by_y(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i) by_x[i] = by_y[i] = i;
    long long cmp = 0;
    std::sort(by_x.begin(), by_x.end(), [&](std::uint32_t a, std::uint32_t b) {
        ++cmp;
        return points[a].x < points[b].x;
    });
    std::sort(by_y.begin(), by_y.end(), [&](std::uint32_t a, std::uint32_t b) {
        ++cmp;
        return points[a].y < points[b].y;
    });
    t.build_comparisons_ = cmp;

    std::vector<char> in_left(points.size(), 0);

    std::function<std::int32_t(Region, std::vector<std::uint32_t>, std::vector<std::uint32_t>, int,
                               std::int32_t, bool)>
        rec = [&](Region region, std::vector<std::uint32_t> bx, std::vector<std::uint32_t> by, int depth,
                  std::int32_t parent, bool is_left) -> std::int32_t {
        std::int32_t idx = static_cast<std::int32_t>(t.nodes_.size());
        t.nodes_.emplace_back();
        {
            PrimaryNode& nd = t.nodes_[idx];
            nd.region = region;
            nd.depth = depth;
            nd.parent = parent;
            nd.is_left_child = is_left;
            nd.axis = (depth % 2 == 0) ? Axis::vertical : Axis::horizontal;
            nd.region_prob = region.is_empty() ? 0.0 : m.prob(region);
        }

        if (bx.empty() || depth >= t.depth_cap_) {
            PrimaryNode& nd = t.nodes_[idx];
            nd.kind = bx.empty() ? NodeKind::empty_leaf : NodeKind::bad_leaf;
            nd.strip = nd.region; // leaf convention s(v) = r(v)
            nd.strip_prob = nd.region_prob;
            nd.pts_by_x = std::move(bx);
            nd.pts_by_y = std::move(by);
            return idx;
        }

        Axis axis = t.nodes_[idx].axis;
        const auto& axis_sorted = (axis == Axis::vertical) ? bx : by;
        std::vector<double> coords;
        coords.reserve(axis_sorted.size());
        for (std::uint32_t pi : axis_sorted)
            coords.push_back(axis == Axis::vertical ? points[pi].x : points[pi].y);

        StripChoice sc = choose_strip(region, coords, m, axis);
        auto [left_region, right_region] = remove_strip(region, sc.strip, axis);

        const Interval& si = sc.strip.along(axis);
        auto side_of = [&](std::uint32_t pi) -> int {
            double c = (axis == Axis::vertical) ? points[pi].x : points[pi].y;
            if (si.contains(c)) return 0;
            return c <= si.lo ? -1 : 1;
        };

        std::vector<std::uint32_t> lx, ly, rx, ry;
        for (std::uint32_t pi : bx) {
            int s = side_of(pi);
            if (s < 0)
                lx.push_back(pi);
            else if (s > 0)
                rx.push_back(pi);
        }
        for (std::uint32_t pi : by) {
            int s = side_of(pi);
            if (s < 0)
                ly.push_back(pi);
            else if (s > 0)
                ry.push_back(pi);
        }

        // Native catalogue of the left child: points of s(v) ∪ r(right(v)),
        // kept in catalogue-axis order. A horizontal node feeds the x-
        // catalogue, a vertical node the y-catalogue.
        for (std::uint32_t pi : lx) in_left[pi] = 1;
        std::vector<std::uint32_t> left_native;
        const auto& cat_sorted = (axis == Axis::horizontal) ? bx : by;
        left_native.reserve(cat_sorted.size() - lx.size());
        for (std::uint32_t pi : cat_sorted)
            if (!in_left[pi]) left_native.push_back(pi);
        for (std::uint32_t pi : lx) in_left[pi] = 0;

        {
            PrimaryNode& nd = t.nodes_[idx];
            nd.kind = NodeKind::split;
            nd.strip = sc.strip;
            nd.strip_prob = sc.strip_prob;
            nd.pts_by_x = std::move(bx);
            nd.pts_by_y = std::move(by);
        }

        std::int32_t li = rec(left_region, std::move(lx), std::move(ly), depth + 1, idx, true);
        std::int32_t ri = rec(right_region, std::move(rx), std::move(ry), depth + 1, idx, false);
        t.nodes_[idx].left = li;
        t.nodes_[idx].right = ri;
        t.nodes_[li].native_catalogue = std::move(left_native);
        return idx;
    };

    rec(Region::plane(), std::move(by_x), std::move(by_y), 0, -1, false);
    return t;
}

LocateNode PrimaryTree::locate_strip_node(const Point& q) const {
    LocateNode res;
    std::int32_t cur = 0;
    while (true) {
        const PrimaryNode& nd = nodes_[cur];
        if (nd.kind != NodeKind::split) {
            res.node = cur;
            return res;
        }
        const Interval& si = nd.strip.along(nd.axis);
        double c = (nd.axis == Axis::vertical) ? q.x : q.y;
        ++res.comparisons;
        if (c <= si.lo) {
            cur = nd.left;
            continue;
        }
        ++res.comparisons;
        if (c <= si.hi) {
            res.node = cur;
            return res;
        }
        cur = nd.right;
    }
}

std::string PrimaryTree::dump_json() const {
    nlohmann::json arr = nlohmann::json::array();
    std::function<void(std::int32_t)> walk = [&](std::int32_t i) {
        const PrimaryNode& nd = nodes_[i];
        const char* kind = nd.kind == NodeKind::split ? "split"
                           : nd.kind == NodeKind::bad_leaf ? "bad_leaf"
                                                           : "empty_leaf";
        const Interval& si = nd.strip.along(nd.axis);
        arr.push_back({{"depth", nd.depth},
                       {"axis", nd.axis == Axis::vertical ? "vertical" : "horizontal"},
                       {"kind", kind},
                       {"strip_lo", si.lo},
                       {"strip_hi", si.hi},
                       {"region_prob", nd.region_prob},
                       {"points", nd.pts_by_x.size()}});
        if (nd.kind == NodeKind::split) {
            walk(nd.left);
            walk(nd.right);
        }
    };
    if (!nodes_.empty()) walk(0);
    return arr.dump(2) + "\n";
}

} // namespace brt
