#include "brt/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "brt/rng.hpp"

namespace brt {
namespace {

// Uniform points with pairwise-distinct x and y, rejecting collisions so the
// build preconditions hold for any seed.
std::vector<Point> distinct_uniform_points(int n, SplitMix64& rng, double lo, double hi) {
    std::vector<Point> pts;
    pts.reserve(n);
    std::set<double> xs, ys;
    while (static_cast<int>(pts.size()) < n) {
        double x = lo + rng.next_double() * (hi - lo);
        double y = lo + rng.next_double() * (hi - lo);
        if (!xs.insert(x).second || !ys.insert(y).second) continue;
        pts.push_back({x, y});
    }
    return pts;
}

} // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"uniform", "clustered", "staircase", "far_corner",
                                                   "grid"};
    return names;
}

Scenario make_scenario(const std::string& name, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("scenario size must be >= 1");
    SplitMix64 rng(mix_seed(seed, 0xbadc0ffeULL));
    Scenario s;

    if (name == "uniform") {
        s.points = distinct_uniform_points(n, rng, 0.0, 1.0);
        BoxMixtureMeasure b;
        b.boxes.push_back({0.0, 1.0, 0.0, 1.0, 1.0});
        s.measure = Measure(std::move(b));
        return s;
    }
    if (name == "clustered") {
        s.points = distinct_uniform_points(n, rng, 0.0, 1.0);
        BoxMixtureMeasure b;
        const double masses[3] = {0.5, 0.3, 0.2};
        for (double mass : masses) {
            double cx = 0.1 + rng.next_double() * 0.8;
            double cy = 0.1 + rng.next_double() * 0.8;
            b.boxes.push_back({cx - 0.04, cx + 0.04, cy - 0.04, cy + 0.04, mass});
        }
        s.measure = Measure(std::move(b));
        return s;
    }
    if (name == "staircase") return staircase_scenario(n);
    if (name == "far_corner") {
        s.points = distinct_uniform_points(n, rng, 0.0, 1.0);
        // Every atom strictly up-right of every point: one face, no rays.
        DiscreteMeasure d;
        const int k = 4;
        for (int i = 0; i < k; ++i)
            d.atoms.push_back({{1.5 + i * 0.01 + rng.next_double() * 0.005,
                                1.5 + i * 0.013 + rng.next_double() * 0.005},
                               1.0 / k});
        s.measure = Measure(std::move(d));
        return s;
    }
    if (name == "grid") {
        int k = 1;
        while (k * k < n) ++k;
        // Skew each row/column slightly so all x and all y stay distinct.
        for (int i = 0; i < k && static_cast<int>(s.points.size()) < n; ++i)
            for (int j = 0; j < k && static_cast<int>(s.points.size()) < n; ++j)
                s.points.push_back({i + 0.5 * j / k, j + 0.5 * i / k});
        BoxMixtureMeasure b;
        b.boxes.push_back({0.0, static_cast<double>(k), 0.0, static_cast<double>(k), 1.0});
        s.measure = Measure(std::move(b));
        return s;
    }
    throw std::invalid_argument("unknown scenario \"" + name + "\"");
}

} // namespace brt
