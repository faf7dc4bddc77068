#include "brt/biased_bst.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace brt {
namespace {

// Leaf slots are encoded as ~interval_index in child links.
inline bool is_leaf_link(std::int32_t link) { return link < 0; }
inline std::int32_t leaf_interval(std::int32_t link) { return ~link; }

} // namespace

BiasedTree build_biased(const WeightedIntervals& wi) {
    const std::size_t n = wi.keys.size();
    if (wi.weights.size() != n + 1)
        throw std::invalid_argument("build_biased: weights must have keys+1 entries");
    for (std::size_t i = 1; i < n; ++i)
        if (!(wi.keys[i] > wi.keys[i - 1]))
            throw std::invalid_argument("build_biased: keys must be strictly increasing");
    double total = 0.0;
    for (double w : wi.weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("build_biased: weights must be finite and nonnegative");
        total += w;
    }
    if (!(total > 0.0)) throw std::invalid_argument("build_biased: weight sum must be positive");

    BiasedTree t;
    t.keys_ = wi.keys;
    if (n == 0) return t;

    // Floor tiny weights so off-distribution intervals stay at O(log n) depth.
    const double floor_w = total / (static_cast<double>(n + 1) * static_cast<double>(n + 1));
    std::vector<double> prefix(n + 2, 0.0);
    for (std::size_t i = 0; i <= n; ++i)
        prefix[i + 1] = prefix[i] + std::max(wi.weights[i], floor_w);

    t.nodes_.reserve(n);

    // Builds over intervals [ilo, ihi]; keys ilo..ihi-1 separate them.
    std::function<std::int32_t(std::int32_t, std::int32_t)> rec =
        [&](std::int32_t ilo, std::int32_t ihi) -> std::int32_t {
        if (ilo == ihi) return ~ilo; // single interval: leaf slot
        const double lo_base = prefix[ilo];
        const double half = (prefix[ihi + 1] - lo_base) / 2.0;
        // Smallest cut j with weight(ilo..j) >= half; j and j-1 are the two
        // candidates for the most balanced split.
        std::int32_t lo = ilo, hi = ihi - 1;
        while (lo < hi) {
            std::int32_t mid = lo + (hi - lo) / 2;
            if (prefix[mid + 1] - lo_base >= half)
                hi = mid;
            else
                lo = mid + 1;
        }
        std::int32_t cut = lo;
        if (cut > ilo) {
            double max_here = std::max(prefix[cut + 1] - lo_base, prefix[ihi + 1] - prefix[cut + 1]);
            double max_prev = std::max(prefix[cut] - lo_base, prefix[ihi + 1] - prefix[cut]);
            if (max_prev <= max_here) cut = cut - 1; // tie: prefer the left cut
        }
        std::int32_t idx = static_cast<std::int32_t>(t.nodes_.size());
        t.nodes_.push_back({t.keys_[cut], 0, 0, 0});
        std::int32_t l = rec(ilo, cut);
        std::int32_t r = rec(cut + 1, ihi);
        t.nodes_[idx].left = l;
        t.nodes_[idx].right = r;
        std::int32_t cnt = 1;
        if (!is_leaf_link(l)) cnt += t.nodes_[l].subtree_keys;
        if (!is_leaf_link(r)) cnt += t.nodes_[r].subtree_keys;
        t.nodes_[idx].subtree_keys = cnt;
        return idx;
    };
    t.root_ = rec(0, static_cast<std::int32_t>(n));
    return t;
}

LocateResult BiasedTree::locate(double q) const {
    LocateResult res;
    if (root_ < 0) return res;
    std::int32_t link = root_;
    while (!is_leaf_link(link)) {
        const Node& nd = nodes_[link];
        ++res.comparisons;
        link = (q <= nd.key) ? nd.left : nd.right;
    }
    res.interval = leaf_interval(link);
    return res;
}

int BiasedTree::count_geq(int interval_index) const {
    if (interval_index < 0 || interval_index > key_count())
        throw std::out_of_range("count_geq: interval index out of range");
    return key_count() - interval_index;
}

int BiasedTree::depth_of_interval(int interval_index) const {
    if (root_ < 0) return 0;
    std::int32_t link = root_;
    int depth = 0;
    while (!is_leaf_link(link)) {
        const Node& nd = nodes_[link];
        ++depth;
        // Intervals 0..cut live in the left subtree of the node cutting at
        // key index cut; recover the cut from the key.
        auto it = std::lower_bound(keys_.begin(), keys_.end(), nd.key);
        std::int32_t cut = static_cast<std::int32_t>(it - keys_.begin());
        link = (interval_index <= cut) ? nd.left : nd.right;
    }
    return depth;
}

int BiasedTree::max_depth() const {
    int best = 0;
    std::function<void(std::int32_t, int)> walk = [&](std::int32_t link, int d) {
        if (is_leaf_link(link)) {
            best = std::max(best, d);
            return;
        }
        walk(nodes_[link].left, d + 1);
        walk(nodes_[link].right, d + 1);
    };
    if (root_ >= 0) walk(root_, 0);
    return best;
}

bool BiasedTree::structurally_valid() const {
    if (root_ < 0) return keys_.empty();
    std::vector<double> inorder;
    bool ok = true;
    std::function<int(std::int32_t)> walk = [&](std::int32_t link) -> int {
        if (is_leaf_link(link)) return 0;
        const Node& nd = nodes_[link];
        int cl = walk(nd.left);
        inorder.push_back(nd.key);
        int cr = walk(nd.right);
        if (nd.subtree_keys != cl + cr + 1) ok = false;
        return cl + cr + 1;
    };
    int total = walk(root_);
    if (total != key_count()) ok = false;
    for (std::size_t i = 0; i < inorder.size(); ++i)
        if (inorder[i] != keys_[i]) ok = false;
    return ok;
}

} // namespace brt
