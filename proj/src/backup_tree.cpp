#include "brt/backup_tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brt {
namespace {

void check_distinct(const std::vector<Point>& pts) {
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

struct Entry {
    double y;
    double w;
};

} // namespace

BackupTree BackupTree::build(const std::vector<Point>& points, const std::vector<double>& point_weights,
                             double identity, Combine combine) {
    check_distinct(points);
    if (!point_weights.empty() && point_weights.size() != points.size())
        throw std::invalid_argument("backup build: weights must align with points");

    BackupTree t;
    t.n_ = points.size();
    t.has_monoid_ = !point_weights.empty();
    t.identity_ = identity;
    t.combine_ = std::move(combine);
    if (points.empty()) return t;

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    long long cmp = 0;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        ++cmp;
        return points[a].x < points[b].x;
    });
    t.build_comparisons_ = cmp;

    t.nodes_.reserve(2 * points.size());

    // Returns (node index, y-sorted entries of its subtree).
    std::function<std::pair<std::int32_t, std::vector<Entry>>(std::size_t, std::size_t)> rec =
        [&](std::size_t lo, std::size_t hi) -> std::pair<std::int32_t, std::vector<Entry>> {
        std::int32_t idx = static_cast<std::int32_t>(t.nodes_.size());
        t.nodes_.emplace_back();
        if (hi - lo == 1) {
            const Point& p = points[order[lo]];
            double w = t.has_monoid_ ? point_weights[order[lo]] : 0.0;
            std::vector<Entry> list{{p.y, w}};
            Node& nd = t.nodes_[idx];
            nd.split_x = p.x;
            nd.ys = {p.y};
            if (t.has_monoid_) nd.suffix_agg = {t.combine_(t.identity_, w), t.identity_};
            return {idx, std::move(list)};
        }
        std::size_t mid = (lo + hi) / 2;
        auto [li, llist] = rec(lo, mid);
        auto [ri, rlist] = rec(mid, hi);
        std::vector<Entry> merged;
        merged.reserve(llist.size() + rlist.size());
        Node& nd = t.nodes_[idx];
        nd.left = li;
        nd.right = ri;
        nd.split_x = points[order[mid]].x;
        nd.bl.reserve(merged.capacity() + 1);
        nd.br.reserve(merged.capacity() + 1);
        std::size_t a = 0, b = 0;
        while (a < llist.size() || b < rlist.size()) {
            nd.bl.push_back(static_cast<std::int32_t>(a));
            nd.br.push_back(static_cast<std::int32_t>(b));
            bool take_left;
            if (a == llist.size())
                take_left = false;
            else if (b == rlist.size())
                take_left = true;
            else {
                ++t.build_comparisons_;
                take_left = llist[a].y < rlist[b].y;
            }
            merged.push_back(take_left ? llist[a++] : rlist[b++]);
        }
        nd.bl.push_back(static_cast<std::int32_t>(a));
        nd.br.push_back(static_cast<std::int32_t>(b));
        nd.ys.reserve(merged.size());
        for (const auto& e : merged) nd.ys.push_back(e.y);
        if (t.has_monoid_) {
            nd.suffix_agg.assign(merged.size() + 1, t.identity_);
            for (std::size_t i = merged.size(); i-- > 0;)
                nd.suffix_agg[i] = t.combine_(merged[i].w, nd.suffix_agg[i + 1]);
        }
        return {idx, std::move(merged)};
    };
    auto [root, list] = rec(0, points.size());
    (void)list;
    t.root_ = root;
    for (const auto& nd : t.nodes_) t.total_entries_ += nd.ys.size();
    return t;
}

BackupCount BackupTree::count(const Point& q) const {
    BackupCount res;
    if (has_monoid_) res.aggregate = identity_;
    if (root_ < 0) return res;

    // Binary search once in the root list for the least position with
    // y >= q_y; bridges keep that position exact while descending.
    const Node* node = &nodes_[root_];
    std::int32_t lo = 0, hi = static_cast<std::int32_t>(node->ys.size());
    while (lo < hi) {
        std::int32_t mid = lo + (hi - lo) / 2;
        ++res.comparisons;
        if (node->ys[mid] >= q.y)
            hi = mid;
        else
            lo = mid + 1;
    }
    std::int32_t pos = lo;

    while (true) {
        if (node->left < 0) { // leaf: one point with x = split_x
            ++res.comparisons;
            if (q.x <= node->split_x && pos == 0) {
                res.count += 1;
                if (has_monoid_) res.aggregate = combine_(res.aggregate, node->suffix_agg[0]);
            }
            break;
        }
        ++res.comparisons;
        if (q.x <= node->split_x) {
            // Right subtree lies entirely at x >= q_x: take its suffix.
            const Node& r = nodes_[node->right];
            std::int32_t rpos = node->br[pos];
            res.count += static_cast<int>(r.ys.size()) - rpos;
            if (has_monoid_) res.aggregate = combine_(res.aggregate, r.suffix_agg[rpos]);
            pos = node->bl[pos];
            node = &nodes_[node->left];
        } else {
            pos = node->br[pos];
            node = &nodes_[node->right];
        }
    }
    return res;
}

} // namespace brt
