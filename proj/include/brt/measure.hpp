#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "brt/geometry.hpp"

namespace brt {

// Query distributions are given explicitly so that Pr(rectangle) is an O(1)
// oracle (up to the fixed number of components).

struct DiscreteMeasure {
    struct Atom {
        Point p;
        double mass = 0.0;
    };
    std::vector<Atom> atoms;
};

struct BoxMixtureMeasure {
    struct Box {
        double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0; // closed box, positive area
        double mass = 0.0;
    };
    std::vector<Box> boxes;
};

struct ValidationResult {
    bool ok = true;
    std::string issue; // first violation, empty when ok
};

class Measure {
public:
    Measure() = default;
    explicit Measure(DiscreteMeasure d) : rep_(std::move(d)) {}
    explicit Measure(BoxMixtureMeasure b) : rep_(std::move(b)) {}

    bool is_discrete() const { return std::holds_alternative<DiscreteMeasure>(rep_); }
    const DiscreteMeasure& discrete() const { return std::get<DiscreteMeasure>(rep_); }
    const BoxMixtureMeasure& boxes() const { return std::get<BoxMixtureMeasure>(rep_); }

    // Probability mass of r. Atoms honor open/closed sides exactly; box
    // boundaries are measure-zero and treated as closed.
    double prob(const Region& r) const;

    // Pr(r | given) = Pr(r ∩ given)/Pr(given); 0 when Pr(given) = 0 so that
    // zero-mass conditioning never produces NaN (callers fall back to
    // uniform weights).
    double conditional(const Region& r, const Region& given) const;

    // Deterministic: the same (seed, index) always yields the same point.
    Point sample(std::uint64_t seed, std::uint64_t index) const;

    ValidationResult validate() const;

    std::string to_json() const;
    static Measure from_json(const std::string& text);

private:
    std::variant<DiscreteMeasure, BoxMixtureMeasure> rep_;
};

} // namespace brt
