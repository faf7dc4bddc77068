#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "brt/measure.hpp"
#include "brt/rng.hpp"

using namespace brt;

namespace {

Measure single_atom(double x, double y) {
    DiscreteMeasure d;
    d.atoms.push_back({{x, y}, 1.0});
    return Measure(std::move(d));
}

Measure unit_box() {
    BoxMixtureMeasure b;
    b.boxes.push_back({0.0, 1.0, 0.0, 1.0, 1.0});
    return Measure(std::move(b));
}

} // namespace

TEST_CASE("prob on atoms and boxes") {
    CHECK(single_atom(0, 0).prob(Region::plane()) == 1.0);

    Region strip{Interval::half_open(1.0, 2.0), Interval::all()};
    CHECK(single_atom(1, 1).prob(strip) == 0.0); // open left side excludes x=1

    Region half{Interval::closed(0.0, 0.5), Interval::all()};
    CHECK(unit_box().prob(half) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("conditional probability") {
    Measure m = single_atom(3, 4);
    Region r{Interval::half_open(2.0, 5.0), Interval::all()};
    CHECK(m.conditional(r, Region::plane()) == m.prob(r));

    DiscreteMeasure two;
    two.atoms.push_back({{0.0, 0.0}, 0.5});
    two.atoms.push_back({{5.0, 5.0}, 0.5});
    Measure m2{std::move(two)};
    Region rr{Interval::closed(4.0, 6.0), Interval::all()};
    Region given{Interval::closed(0.0, 6.0), Interval::all()};
    CHECK(m2.conditional(rr, given) == doctest::Approx(0.5));

    Region nothing{Interval::closed(100.0, 101.0), Interval::all()};
    CHECK(m2.conditional(rr, nothing) == 0.0);
}

TEST_CASE("sampling is deterministic and matches the support") {
    Measure m = single_atom(3, 4);
    for (std::uint64_t s = 0; s < 10; ++s) {
        Point p = m.sample(s, 0);
        CHECK(p.x == 3.0);
        CHECK(p.y == 4.0);
    }
    Measure b = unit_box();
    Point p1 = b.sample(123, 45);
    Point p2 = b.sample(123, 45);
    CHECK(p1.x == p2.x);
    CHECK(p1.y == p2.y);
    CHECK(b.sample(123, 46).x != p1.x);
}

TEST_CASE("law of large numbers on the unit box") {
    Measure b = unit_box();
    const int n = 100000;
    double sx = 0.0, sy = 0.0;
    for (int i = 0; i < n; ++i) {
        Point p = b.sample(99, i);
        sx += p.x;
        sy += p.y;
    }
    CHECK(std::abs(sx / n - 0.5) < 0.01);
    CHECK(std::abs(sy / n - 0.5) < 0.01);
}

TEST_CASE("validate reports the first violation") {
    DiscreteMeasure ok;
    ok.atoms.push_back({{0, 0}, 0.5});
    ok.atoms.push_back({{1, 1}, 0.5});
    CHECK(Measure(ok).validate().ok);

    DiscreteMeasure bad = ok;
    bad.atoms[1].mass = 0.6;
    auto r = Measure(bad).validate();
    CHECK_FALSE(r.ok);
    CHECK(r.issue.find("mass sum 1.1") != std::string::npos);

    DiscreteMeasure dup = ok;
    dup.atoms[1].p = dup.atoms[0].p;
    CHECK_FALSE(Measure(dup).validate().ok);

    BoxMixtureMeasure flat;
    flat.boxes.push_back({0.0, 1.0, 2.0, 2.0, 1.0});
    CHECK_FALSE(Measure(flat).validate().ok);
}

TEST_CASE("finite additivity and monotonicity") {
    SplitMix64 rng(11);
    DiscreteMeasure d;
    for (int i = 0; i < 7; ++i) d.atoms.push_back({{rng.next_double(), rng.next_double()}, 1.0 / 7});
    BoxMixtureMeasure bx;
    bx.boxes.push_back({0.0, 0.6, 0.0, 1.0, 0.5});
    bx.boxes.push_back({0.3, 1.0, 0.2, 0.9, 0.5});
    for (const Measure& m : {Measure(d), Measure(bx), unit_box()}) {
        CHECK(m.prob(Region::plane()) == doctest::Approx(1.0).epsilon(1e-9));
        for (int iter = 0; iter < 500; ++iter) {
            double cut = rng.next_double();
            Region whole = Region::plane();
            whole.xi = Interval::half_open(0.1, 0.9);
            Region l = whole, r = whole;
            l.xi = Interval::half_open(0.1, cut * 0.8 + 0.1);
            r.xi = Interval::half_open(l.xi.hi, 0.9);
            CHECK(std::abs(m.prob(whole) - m.prob(l) - m.prob(r)) <= 1e-9);
            CHECK(m.prob(l) <= m.prob(whole) + 1e-12);
        }
    }
}

TEST_CASE("sampled frequencies converge to prob") {
    SplitMix64 rng(5);
    BoxMixtureMeasure bx;
    bx.boxes.push_back({0.0, 0.5, 0.0, 0.5, 0.25});
    bx.boxes.push_back({0.0, 1.0, 0.0, 1.0, 0.75});
    Measure m{std::move(bx)};
    const int n = 100000;
    for (int iter = 0; iter < 5; ++iter) {
        Region r = Region::plane();
        double a = rng.next_double() * 0.8;
        r.xi = Interval::half_open(a, a + rng.next_double() * (1.0 - a));
        double p = m.prob(r);
        int hits = 0;
        for (int i = 0; i < n; ++i)
            if (r.contains(m.sample(1234, i))) ++hits;
        double freq = static_cast<double>(hits) / n;
        double se = std::sqrt(std::max(p * (1 - p), 1e-9) / n);
        CHECK(std::abs(freq - p) <= 4 * se + 1e-9);
    }
}

TEST_CASE("measure JSON round trip") {
    DiscreteMeasure d;
    d.atoms.push_back({{0.25, -1.5}, 0.375});
    d.atoms.push_back({{2.0, 3.0}, 0.625});
    Measure m{std::move(d)};
    Measure back = Measure::from_json(m.to_json());
    REQUIRE(back.is_discrete());
    CHECK(back.discrete().atoms.size() == 2);
    CHECK(back.discrete().atoms[0].p.x == 0.25);
    CHECK(back.discrete().atoms[1].mass == 0.625);

    CHECK_THROWS(Measure::from_json("{\"type\":\"nope\",\"components\":[]}"));
    CHECK_THROWS(Measure::from_json("not json"));
}
