#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "brt/biased_bst.hpp"
#include "brt/rng.hpp"

using namespace brt;

namespace {

// Entropy of a (not necessarily normalized) weight vector.
double entropy_bits(const std::vector<double>& w) {
    double total = 0.0;
    for (double v : w) total += v;
    double h = 0.0;
    for (double v : w)
        if (v > 0.0) h -= (v / total) * std::log2(v / total);
    return h;
}

// Plain binary search for the half-open interval (k[i-1], k[i]] containing q.
int reference_locate(const std::vector<double>& keys, double q) {
    return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), q) - keys.begin());
}

// Floored, renormalized weights as the builder sees them.
std::vector<double> floored(const std::vector<double>& w) {
    double total = 0.0;
    for (double v : w) total += v;
    double f = total / (static_cast<double>(w.size()) * w.size());
    std::vector<double> out(w.size());
    double t2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) t2 += out[i] = std::max(w[i], f);
    for (double& v : out) v /= t2;
    return out;
}

std::vector<double> random_weights(SplitMix64& rng, std::size_t n) {
    std::vector<double> w(n);
    for (auto& v : w) {
        switch (rng.next_below(4)) {
        case 0: v = 0.0; break;                                   // holes
        case 1: v = std::pow(rng.next_double(), 8.0); break;      // heavy skew
        default: v = rng.next_double(); break;
        }
    }
    bool any = false;
    for (double v : w) any = any || v > 0.0;
    if (!any) w[rng.next_below(n)] = 1.0;
    return w;
}

} // namespace

TEST_CASE("single key tree") {
    BiasedTree t = build_biased({{5.0}, {0.9, 0.1}});
    CHECK(t.locate(4.0).interval == 0);
    CHECK(t.locate(4.0).comparisons == 1);
    CHECK(t.locate(5.0).interval == 0); // (-inf, 5]
    CHECK(t.locate(5.0001).interval == 1);
}

TEST_CASE("locate matches rank arithmetic") {
    BiasedTree t = build_biased({{1.0, 2.0, 3.0}, {0.25, 0.25, 0.25, 0.25}});
    CHECK(t.locate(2.5).interval == 2); // (2, 3]
    CHECK(t.count_geq(0) == 3);
    CHECK(t.count_geq(3) == 0);
    CHECK(t.count_geq(2) == 1);
    CHECK_THROWS_AS(t.count_geq(4), std::out_of_range);
}

TEST_CASE("expected comparisons beat the entropy bound on the paper vector") {
    std::vector<double> w{0.5, 0.25, 0.125, 0.125};
    BiasedTree t = build_biased({{1.0, 2.0, 3.0}, w});
    double mean = 0.0;
    for (int i = 0; i < 4; ++i) mean += w[i] * t.depth_of_interval(i);
    CHECK(mean <= entropy_bits(w) + 2.0); // == 1.75 + 2
}

TEST_CASE("uniform weights over 7 keys give a perfectly balanced tree") {
    std::vector<double> keys{1, 2, 3, 4, 5, 6, 7};
    BiasedTree t = build_biased({keys, std::vector<double>(8, 1.0)});
    CHECK(t.max_depth() == 3);
    for (int i = 0; i <= 7; ++i) CHECK(t.depth_of_interval(i) == 3);
}

TEST_CASE("empty tree locates interval 0") {
    BiasedTree t = build_biased({{}, {1.0}});
    CHECK(t.locate(123.0).interval == 0);
    CHECK(t.locate(123.0).comparisons == 0);
    CHECK(t.count_geq(0) == 0);
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(build_biased({{1.0, 1.0}, {1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_biased({{1.0}, {1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_biased({{1.0}, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_biased({{1.0}, {-1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("locate agrees with binary search on random instances") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = 1 + rng.next_below(64);
        std::vector<double> keys;
        double k = rng.next_double();
        for (std::size_t i = 0; i < n; ++i) keys.push_back(k += rng.next_double() + 1e-6);
        BiasedTree t = build_biased({keys, random_weights(rng, n + 1)});
        REQUIRE(t.structurally_valid());
        for (int q = 0; q < 50; ++q) {
            double v = rng.next_double() * (keys.back() - keys.front() + 2.0) + keys.front() - 1.0;
            if (q % 7 == 0) v = keys[rng.next_below(n)]; // exact key hits
            CHECK(t.locate(v).interval == reference_locate(keys, v));
        }
    }
}

TEST_CASE("per-interval depth bound: log2(1/p') + 2") {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = 1 + rng.next_below(128);
        std::vector<double> keys;
        double k = 0.0;
        for (std::size_t i = 0; i < n; ++i) keys.push_back(k += 1.0);
        auto w = random_weights(rng, n + 1);
        BiasedTree t = build_biased({keys, w});
        auto p = floored(w);
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(t.depth_of_interval(static_cast<int>(i)) <= std::log2(1.0 / p[i]) + 2.0 + 1e-9);
    }
}

TEST_CASE("worst-case depth bounded by the flooring guarantee") {
    SplitMix64 rng(31);
    for (std::size_t n : {1u, 2u, 7u, 63u, 200u, 1000u}) {
        std::vector<double> keys;
        double k = 0.0;
        for (std::size_t i = 0; i < n; ++i) keys.push_back(k += 1.0);
        auto w = random_weights(rng, n + 1);
        BiasedTree t = build_biased({keys, w});
        CHECK(t.max_depth() <= 4.0 * std::log2(static_cast<double>(n) + 1.0) + 2.0 + 1e-9);
    }
}

TEST_CASE("sampled mean comparisons stay within entropy + 2") {
    SplitMix64 rng(8);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 4 + rng.next_below(512);
        std::vector<double> keys;
        double k = 0.0;
        for (std::size_t i = 0; i < n; ++i) keys.push_back(k += 1.0);
        auto w = random_weights(rng, n + 1);
        double total = 0.0;
        for (double v : w) total += v;
        BiasedTree t = build_biased({keys, w});

        // exact expectation under the true weights
        double mean = 0.0;
        for (std::size_t i = 0; i <= n; ++i) mean += (w[i] / total) * t.depth_of_interval(static_cast<int>(i));
        CHECK(mean <= entropy_bits(w) + 2.0 + 1e-9);

        // and the sampled version used by the acceptance suite
        const int samples = 20000;
        double sum = 0.0;
        for (int s = 0; s < samples; ++s) {
            double u = rng.next_double() * total, cum = 0.0;
            std::size_t i = 0;
            while (i < n && (cum + w[i]) <= u) cum += w[i++];
            double q = (i == 0) ? keys.front() - 1.0 : keys[i - 1] + 0.5; // inside interval i
            if (i > 0 && i <= n && q > keys[std::min(i, n - 1)]) q = keys[i - 1]; // tight intervals
            sum += t.locate(q).comparisons;
        }
        CHECK(sum / samples <= entropy_bits(w) + 2.0 + 0.05);
    }
}
