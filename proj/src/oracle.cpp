#include "brt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace brt {
namespace {

std::vector<double> sorted_values(const std::vector<Point>& points, const DiscreteMeasure& m, bool use_x) {
    std::vector<double> vals;
    vals.reserve(points.size() + m.atoms.size());
    for (const auto& p : points) vals.push_back(use_x ? p.x : p.y);
    for (const auto& a : m.atoms) vals.push_back(use_x ? a.p.x : a.p.y);
    std::sort(vals.begin(), vals.end());
    return vals;
}

void check_disjoint_coords(const std::vector<Point>& points, const DiscreteMeasure& m) {
    for (bool use_x : {true, false}) {
        auto vals = sorted_values(points, m, use_x);
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (vals[i] == vals[i - 1])
                throw std::invalid_argument(
                    "oracle: points and atoms must have pairwise-distinct coordinates on each axis");
    }
}

int slot_of(const std::vector<double>& vals, double v) {
    return static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin());
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

int brute_count(const std::vector<Point>& points, const Point& q) {
    int c = 0;
    for (const auto& p : points)
        if (p.x >= q.x && p.y >= q.y) ++c;
    return c;
}

GridDecomposition GridDecomposition::build(const std::vector<Point>& points, const DiscreteMeasure& m) {
    check_disjoint_coords(points, m);
    GridDecomposition g;
    g.xs_ = sorted_values(points, m, true);
    g.ys_ = sorted_values(points, m, false);
    g.cols_ = static_cast<int>(g.xs_.size()) + 1;
    g.rows_ = static_cast<int>(g.ys_.size()) + 1;
    const int ncells = g.cols_ * g.rows_;
    auto cell = [&](int c, int r) { return r * g.cols_ + c; };

    UnionFind uf(ncells);
    // Horizontal neighbours share the vertical line x = xs[c]; crossing it is
    // blocked where a down-ray runs along that line (some point has p_x on
    // the line and the edge lies at or below p_y).
    for (int c = 0; c + 1 < g.cols_; ++c) {
        for (int r = 0; r < g.rows_; ++r) {
            double upper = (r == g.rows_ - 1) ? kInf : g.ys_[r];
            bool blocked = false;
            for (const auto& p : points)
                if (p.x == g.xs_[c] && upper <= p.y) {
                    blocked = true;
                    break;
                }
            if (!blocked) uf.unite(cell(c, r), cell(c + 1, r));
        }
    }
    // Vertical neighbours share the horizontal line y = ys[r]; left-rays block.
    for (int r = 0; r + 1 < g.rows_; ++r) {
        for (int c = 0; c < g.cols_; ++c) {
            double upper = (c == g.cols_ - 1) ? kInf : g.xs_[c];
            bool blocked = false;
            for (const auto& p : points)
                if (p.y == g.ys_[r] && upper <= p.x) {
                    blocked = true;
                    break;
                }
            if (!blocked) uf.unite(cell(c, r), cell(c, r + 1));
        }
    }

    g.face_.resize(ncells);
    g.dom_.resize(ncells);
    for (int c = 0; c < g.cols_; ++c) {
        // Representative interior coordinates for dominance counting.
        double rx = (c == 0) ? (g.xs_.empty() ? 0.0 : g.xs_.front() - 1.0)
                 : (c == g.cols_ - 1) ? g.xs_.back() + 1.0
                                      : (g.xs_[c - 1] + g.xs_[c]) / 2.0;
        for (int r = 0; r < g.rows_; ++r) {
            double ry = (r == 0) ? (g.ys_.empty() ? 0.0 : g.ys_.front() - 1.0)
                     : (r == g.rows_ - 1) ? g.ys_.back() + 1.0
                                          : (g.ys_[r - 1] + g.ys_[r]) / 2.0;
            g.face_[cell(c, r)] = uf.find(cell(c, r));
            g.dom_[cell(c, r)] = brute_count(points, {rx, ry});
        }
    }
    return g;
}

int GridDecomposition::face_of_cell(int col, int row) const { return face_[row * cols_ + col]; }
int GridDecomposition::dominance_of_cell(int col, int row) const { return dom_[row * cols_ + col]; }

int GridDecomposition::face_of_point(const Point& p) const {
    // The point sits on its own grid lines (no rays there); the four cells
    // around it share a face, so take the upper-right one.
    int c = slot_of(xs_, p.x) + 1;
    int r = slot_of(ys_, p.y) + 1;
    return face_of_cell(c, r);
}

double face_entropy(const std::vector<Point>& points, const DiscreteMeasure& m) {
    GridDecomposition g = GridDecomposition::build(points, m);
    std::map<int, double> mass;
    double total = 0.0;
    for (const auto& a : m.atoms) {
        mass[g.face_of_point(a.p)] += a.mass;
        total += a.mass;
    }
    double h = 0.0;
    for (const auto& [_, w] : mass) {
        double p = w / total;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

double optimal_expected_cost(const std::vector<Point>& points, const DiscreteMeasure& m) {
    if (points.size() > 6) throw std::invalid_argument("oracle: at most 6 points");
    if (m.atoms.size() > 12) throw std::invalid_argument("oracle: at most 12 atoms");
    check_disjoint_coords(points, m);

    std::vector<double> xs = sorted_values(points, m, true);
    std::vector<double> ys = sorted_values(points, m, false);
    const int mx = static_cast<int>(xs.size());
    const int my = static_cast<int>(ys.size());
    if (mx == 0) return 0.0;

    std::vector<int> px(points.size()), py(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        px[i] = slot_of(xs, points[i].x);
        py[i] = slot_of(ys, points[i].y);
    }
    // 2D prefix sums of atom mass over slot positions.
    std::vector<double> pref((mx + 1) * (my + 1), 0.0);
    auto pr = [&](int i, int j) -> double& { return pref[i * (my + 1) + j]; };
    for (const auto& a : m.atoms) pr(slot_of(xs, a.p.x) + 1, slot_of(ys, a.p.y) + 1) += a.mass;
    for (int i = 1; i <= mx; ++i)
        for (int j = 1; j <= my; ++j) pr(i, j) += pr(i - 1, j) + pr(i, j - 1) - pr(i - 1, j - 1);
    auto mass_in = [&](int a, int b, int c, int d) {
        return pr(b + 1, d + 1) - pr(a, d + 1) - pr(b + 1, c) + pr(a, c);
    };

    // A state is a slot rectangle [a,b] x [c,d]: the real region between the
    // midpoint boundaries around those slots. Face-pure means no ray meets
    // its interior.
    auto pure = [&](int a, int b, int c, int d) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (a <= px[i] && px[i] <= b && py[i] >= c) return false; // down-ray
            if (c <= py[i] && py[i] <= d && px[i] >= a) return false; // left-ray
        }
        return true;
    };

    std::vector<double> memo(static_cast<std::size_t>(mx) * mx * my * my, -1.0);
    auto key = [&](int a, int b, int c, int d) {
        return ((static_cast<std::size_t>(a) * mx + b) * my + c) * my + d;
    };

    std::function<double(int, int, int, int)> solve = [&](int a, int b, int c, int d) -> double {
        double& slot = memo[key(a, b, c, d)];
        if (slot >= 0.0) return slot;
        double mass = mass_in(a, b, c, d);
        if (mass <= 0.0 || pure(a, b, c, d)) return slot = 0.0;
        double best = kInf;
        for (int k = a; k < b; ++k)
            best = std::min(best, solve(a, k, c, d) + solve(k + 1, b, c, d));
        for (int k = c; k < d; ++k)
            best = std::min(best, solve(a, b, c, k) + solve(a, b, k + 1, d));
        return slot = mass + best;
    };
    return solve(0, mx - 1, 0, my - 1);
}

Scenario staircase_scenario(int n) {
    if (n < 1) throw std::invalid_argument("staircase_scenario: n >= 1");
    Scenario s;
    s.points.reserve(n);
    for (int i = 1; i <= n; ++i) s.points.push_back({static_cast<double>(i), static_cast<double>(n + 1 - i)});
    DiscreteMeasure d;
    const double mass = 1.0 / (n + 1);
    for (int j = 0; j <= n; ++j) d.atoms.push_back({{j + 0.5, n + 0.5 - j}, mass});
    s.measure = Measure(std::move(d));
    return s;
}

} // namespace brt
