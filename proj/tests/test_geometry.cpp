#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "brt/geometry.hpp"
#include "brt/rng.hpp"

using namespace brt;

TEST_CASE("contains honors open/closed boundaries") {
    CHECK(Region::plane().contains({0.0, 0.0}));

    Region strip{Interval::half_open(1.0, 2.0), Interval::all()};
    CHECK_FALSE(strip.contains({1.0, 5.0})); // left side open
    CHECK(strip.contains({2.0, 5.0}));       // right side closed
    CHECK(strip.contains({1.5, -100.0}));
}

TEST_CASE("dominance region is closed at the corner") {
    Region r = dominance_region({0.0, 0.0});
    CHECK(r.xi.lo == 0.0);
    CHECK(r.xi.lo_closed);
    CHECK(r.yi.hi == kInf);

    CHECK(dominance_region({1.0, 1.0}).contains({1.0, 1.0}));
    CHECK_FALSE(dominance_region({1.0, 1.0}).contains({0.999, 5.0}));
}

TEST_CASE("remove_strip partitions the region") {
    Region plane = Region::plane();
    Region strip{Interval::half_open(1.0, 2.0), Interval::all()};
    auto [left, right] = remove_strip(plane, strip, Axis::vertical);
    CHECK(left.xi == Interval{-kInf, 1.0, false, true});
    CHECK(right.xi == Interval{2.0, kInf, false, false});

    Region r2{Interval::half_open(0.0, 2.0), Interval::all()};
    auto [l2, r2b] = remove_strip(r2, r2, Axis::vertical);
    CHECK(l2.is_empty());
    CHECK(r2b.is_empty());

    Region r3{Interval::all(), Interval::half_open(0.0, 10.0)};
    Region s3{Interval::all(), Interval::half_open(0.0, 3.0)};
    auto [below, above] = remove_strip(r3, s3, Axis::horizontal);
    CHECK(below.is_empty());
    CHECK(above.yi == Interval{3.0, 10.0, false, true});

    Region outside{Interval::half_open(5.0, 6.0), Interval::all()};
    CHECK_THROWS_AS(remove_strip(r2, outside, Axis::vertical), std::invalid_argument);
}

TEST_CASE("half-open partition is exhaustive and exclusive") {
    SplitMix64 rng(42);
    for (int iter = 0; iter < 2000; ++iter) {
        double a = rng.next_double() * 10.0 - 5.0;
        double b = a + rng.next_double() * 5.0 + 1e-3;
        double slo = a + (b - a) * rng.next_double();
        double shi = slo + (b - a - (slo - a)) * rng.next_double();
        Axis axis = (iter % 2 == 0) ? Axis::vertical : Axis::horizontal;
        Region r = Region::plane();
        r.along(axis) = Interval::half_open(a, b);
        Region s = r;
        s.along(axis) = Interval::half_open(slo, shi);
        auto [left, right] = remove_strip(r, s, axis);

        for (int k = 0; k < 20; ++k) {
            Point p{rng.next_double() * 12.0 - 6.0, rng.next_double() * 12.0 - 6.0};
            if (!r.contains(p)) continue;
            int hits = (left.contains(p) ? 1 : 0) + (s.contains(p) ? 1 : 0) + (right.contains(p) ? 1 : 0);
            CHECK(hits == 1);
        }
        // boundary points of the strip
        Point on_lo{axis == Axis::vertical ? slo : 0.0, axis == Axis::vertical ? 0.0 : slo};
        Point on_hi{axis == Axis::vertical ? shi : 0.0, axis == Axis::vertical ? 0.0 : shi};
        if (r.contains(on_lo))
            CHECK((left.contains(on_lo) ? 1 : 0) + (s.contains(on_lo) ? 1 : 0) +
                      (right.contains(on_lo) ? 1 : 0) ==
                  1);
        if (r.contains(on_hi)) CHECK(s.contains(on_hi));
    }
}

TEST_CASE("contains is monotone under region inclusion") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 1000; ++iter) {
        double lo = rng.next_double() * 4.0 - 2.0;
        double hi = lo + rng.next_double() * 3.0;
        Region inner{Interval::half_open(lo, hi), Interval::half_open(lo - 1.0, hi)};
        Region outer{Interval::half_open(lo - 1.0, hi + 1.0), Interval::half_open(lo - 2.0, hi + 0.5)};
        REQUIRE(region_subset(inner, outer));
        Point p{rng.next_double() * 8.0 - 4.0, rng.next_double() * 8.0 - 4.0};
        if (inner.contains(p)) CHECK(outer.contains(p));
    }
}

TEST_CASE("interval emptiness conventions") {
    CHECK(Interval::none().is_empty());
    CHECK_FALSE(Interval::closed(1.0, 1.0).is_empty()); // degenerate point interval
    CHECK(Interval::half_open(1.0, 1.0).is_empty());
    CHECK_FALSE(Interval::all().is_empty());
}
