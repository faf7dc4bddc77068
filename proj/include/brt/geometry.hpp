#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace brt {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// One-dimensional interval with explicit open/closed flags per side.
// Unbounded ends (+-inf) are always open. The empty interval is represented
// implicitly: lo > hi, or lo == hi without both ends closed.
struct Interval {
    double lo = -kInf;
    double hi = kInf;
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval all() { return {}; }
    static Interval none() { return {0.0, 0.0, false, false}; }
    // (lo, hi] — the strip convention used throughout.
    static Interval half_open(double lo, double hi) { return {lo, hi, false, true}; }
    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    // [lo, +inf)
    static Interval at_least(double lo) { return {lo, kInf, true, false}; }

    bool is_empty() const { return lo > hi || (lo == hi && !(lo_closed && hi_closed)); }

    bool contains(double v) const {
        return (v > lo || (lo_closed && v == lo)) && (v < hi || (hi_closed && v == hi));
    }

    bool is_unbounded() const { return lo == -kInf && hi == kInf; }

    // Length of the closure; only meaningful for finite intervals.
    double length() const { return is_empty() ? 0.0 : hi - lo; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
               a.hi_closed == b.hi_closed;
    }
};

// inner ⊆ outer, with boundary flags honored.
inline bool interval_subset(const Interval& inner, const Interval& outer) {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    bool lo_ok = outer.lo < inner.lo || (outer.lo == inner.lo && (outer.lo_closed || !inner.lo_closed));
    bool hi_ok = outer.hi > inner.hi || (outer.hi == inner.hi && (outer.hi_closed || !inner.hi_closed));
    return lo_ok && hi_ok;
}

inline Interval interval_intersect(const Interval& a, const Interval& b) {
    Interval r;
    if (a.lo > b.lo) {
        r.lo = a.lo; r.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        r.lo = b.lo; r.lo_closed = b.lo_closed;
    } else {
        r.lo = a.lo; r.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (a.hi < b.hi) {
        r.hi = a.hi; r.hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        r.hi = b.hi; r.hi_closed = b.hi_closed;
    } else {
        r.hi = a.hi; r.hi_closed = a.hi_closed && b.hi_closed;
    }
    return r;
}

enum class Axis { vertical, horizontal }; // vertical strips split by x

// Axis-aligned, possibly unbounded rectangle: the product xi × yi.
struct Region {
    Interval xi;
    Interval yi;

    static Region plane() { return {Interval::all(), Interval::all()}; }

    bool is_empty() const { return xi.is_empty() || yi.is_empty(); }

    bool contains(const Point& p) const { return xi.contains(p.x) && yi.contains(p.y); }

    const Interval& along(Axis a) const { return a == Axis::vertical ? xi : yi; }
    Interval& along(Axis a) { return a == Axis::vertical ? xi : yi; }
    const Interval& across(Axis a) const { return a == Axis::vertical ? yi : xi; }

    // Closure: all finite bounds closed. Used for the "closure contains a
    // point of S" property.
    Region closure() const {
        Region c = *this;
        if (c.xi.lo != -kInf) c.xi.lo_closed = true;
        if (c.xi.hi != kInf) c.xi.hi_closed = true;
        if (c.yi.lo != -kInf) c.yi.lo_closed = true;
        if (c.yi.hi != kInf) c.yi.hi_closed = true;
        return c;
    }

    friend bool operator==(const Region& a, const Region& b) { return a.xi == b.xi && a.yi == b.yi; }
};

inline Region region_intersect(const Region& a, const Region& b) {
    return {interval_intersect(a.xi, b.xi), interval_intersect(a.yi, b.yi)};
}

inline bool region_subset(const Region& inner, const Region& outer) {
    if (inner.is_empty()) return true;
    return interval_subset(inner.xi, outer.xi) && interval_subset(inner.yi, outer.yi);
}

// Query range R(q) = [q_x, inf) × [q_y, inf), closed at the corner.
inline Region dominance_region(const Point& q) {
    if (!std::isfinite(q.x) || !std::isfinite(q.y))
        throw std::invalid_argument("dominance_region: query point must be finite");
    return {Interval::at_least(q.x), Interval::at_least(q.y)};
}

// Removes strip s from r along the given axis. s must be contained in r and
// span r fully on the other axis. Returns (left_part, right_part); for a
// horizontal axis "left" means below. Either part may be empty.
inline std::pair<Region, Region> remove_strip(const Region& r, const Region& s, Axis axis) {
    if (!region_subset(s, r)) throw std::invalid_argument("remove_strip: strip not inside region");
    if (!(s.across(axis) == r.across(axis)))
        throw std::invalid_argument("remove_strip: strip does not span region on the non-split axis");
    const Interval& ri = r.along(axis);
    const Interval& si = s.along(axis);
    Interval li{ri.lo, si.lo, ri.lo_closed, !si.lo_closed};
    Interval hi_iv{si.hi, ri.hi, !si.hi_closed, ri.hi_closed};
    Region left = r, right = r;
    left.along(axis) = li;
    right.along(axis) = hi_iv;
    return {left, right};
}

} // namespace brt
