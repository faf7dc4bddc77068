#include "brt/kd_baseline.hpp"

#include <functional>

namespace brt {

KdBaseline::KdBaseline(std::shared_ptr<const PrimaryTree> tree) : tree_(std::move(tree)) {
    const auto& nodes = tree_->nodes();
    const auto& pts = tree_->points();
    strip_pts_.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const PrimaryNode& nd = nodes[i];
        if (nd.kind == NodeKind::split) {
            for (std::uint32_t pi : nd.pts_by_x)
                if (nd.strip.contains(pts[pi])) strip_pts_[i].push_back(pi);
        } else {
            strip_pts_[i] = nd.pts_by_x; // leaf: scan everything it holds
        }
        total_entries_ += nd.pts_by_x.size();
    }
}

KdBaseline::Result KdBaseline::count(const Point& q) const {
    Result res;
    const auto& pts = tree_->points();

    // One comparison per order test against a stored bound or coordinate.
    auto interval_right_of = [&](const Interval& iv, double qc) {
        // whole interval >= qc
        ++res.comparisons;
        return iv.lo >= qc;
    };
    auto interval_misses = [&](const Interval& iv, double qc) {
        // whole interval < qc
        ++res.comparisons;
        return iv.hi < qc || (iv.hi == qc && !iv.hi_closed);
    };

    std::function<void(std::int32_t)> rec = [&](std::int32_t ni) {
        const PrimaryNode& nd = tree_->node(ni);
        if (nd.pts_by_x.empty()) return;
        if (interval_misses(nd.region.xi, q.x)) return;
        if (interval_misses(nd.region.yi, q.y)) return;
        if (interval_right_of(nd.region.xi, q.x) && interval_right_of(nd.region.yi, q.y)) {
            res.count += static_cast<int>(nd.pts_by_x.size());
            return;
        }
        for (std::uint32_t pi : strip_pts_[ni]) {
            ++res.comparisons;
            if (pts[pi].x < q.x) continue;
            ++res.comparisons;
            if (pts[pi].y >= q.y) ++res.count;
        }
        if (nd.kind == NodeKind::split) {
            rec(nd.left);
            rec(nd.right);
        }
    };
    if (!tree_->nodes().empty()) rec(tree_->root());
    return res;
}

} // namespace brt
