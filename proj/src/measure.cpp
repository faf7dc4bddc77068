#include "brt/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "brt/rng.hpp"
#include "json.hpp"

namespace brt {
namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Overlap length of the closed box interval [b0, b1] with iv, ignoring
// boundary flags (measure zero for continuous mass).
double overlap_len(double b0, double b1, const Interval& iv) {
    double lo = std::max(b0, iv.is_empty() ? b1 + 1.0 : iv.lo);
    double hi = std::min(b1, iv.hi);
    return std::max(0.0, hi - lo);
}

} // namespace

double Measure::prob(const Region& r) const {
    if (r.is_empty()) return 0.0;
    double total = 0.0;
    if (is_discrete()) {
        for (const auto& a : discrete().atoms)
            if (r.contains(a.p)) total += a.mass;
    } else {
        for (const auto& b : boxes().boxes) {
            double fx = overlap_len(b.x0, b.x1, r.xi) / (b.x1 - b.x0);
            double fy = overlap_len(b.y0, b.y1, r.yi) / (b.y1 - b.y0);
            total += b.mass * fx * fy;
        }
    }
    return clamp01(total);
}

double Measure::conditional(const Region& r, const Region& given) const {
    double pg = prob(given);
    if (pg <= 0.0) return 0.0;
    return clamp01(prob(region_intersect(r, given)) / pg);
}

Point Measure::sample(std::uint64_t seed, std::uint64_t index) const {
    SplitMix64 rng(mix_seed(seed, index));
    double u = rng.next_double();
    if (is_discrete()) {
        const auto& atoms = discrete().atoms;
        double cum = 0.0;
        for (const auto& a : atoms) {
            cum += a.mass;
            if (u < cum) return a.p;
        }
        return atoms.back().p;
    }
    const auto& bx = boxes().boxes;
    double cum = 0.0;
    const BoxMixtureMeasure::Box* chosen = &bx.back();
    for (const auto& b : bx) {
        cum += b.mass;
        if (u < cum) {
            chosen = &b;
            break;
        }
    }
    double px = chosen->x0 + rng.next_double() * (chosen->x1 - chosen->x0);
    double py = chosen->y0 + rng.next_double() * (chosen->y1 - chosen->y0);
    return {px, py};
}

ValidationResult Measure::validate() const {
    std::ostringstream msg;
    double sum = 0.0;
    if (is_discrete()) {
        const auto& atoms = discrete().atoms;
        if (atoms.empty()) return {false, "measure has no components"};
        for (const auto& a : atoms) {
            if (!std::isfinite(a.p.x) || !std::isfinite(a.p.y)) return {false, "atom with non-finite coordinates"};
            if (!(a.mass > 0.0) || a.mass > 1.0) return {false, "atom mass outside (0,1]"};
            sum += a.mass;
        }
        auto sorted = atoms;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.p.x < b.p.x || (a.p.x == b.p.x && a.p.y < b.p.y);
        });
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].p == sorted[i - 1].p) {
                msg << "duplicate atom at (" << sorted[i].p.x << ", " << sorted[i].p.y << ")";
                return {false, msg.str()};
            }
    } else {
        const auto& bx = boxes().boxes;
        if (bx.empty()) return {false, "measure has no components"};
        for (const auto& b : bx) {
            if (!std::isfinite(b.x0) || !std::isfinite(b.x1) || !std::isfinite(b.y0) || !std::isfinite(b.y1))
                return {false, "box with non-finite bounds"};
            if (!(b.x1 > b.x0) || !(b.y1 > b.y0)) return {false, "box with non-positive area"};
            if (!(b.mass > 0.0) || b.mass > 1.0) return {false, "box mass outside (0,1]"};
            sum += b.mass;
        }
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        msg << "mass sum " << sum;
        return {false, msg.str()};
    }
    return {};
}

std::string Measure::to_json() const {
    nlohmann::json j;
    nlohmann::json comps = nlohmann::json::array();
    if (is_discrete()) {
        j["type"] = "discrete";
        for (const auto& a : discrete().atoms)
            comps.push_back({{"point", {a.p.x, a.p.y}}, {"mass", a.mass}});
    } else {
        j["type"] = "boxes";
        for (const auto& b : boxes().boxes)
            comps.push_back({{"box", {b.x0, b.x1, b.y0, b.y1}}, {"mass", b.mass}});
    }
    j["components"] = std::move(comps);
    return j.dump(2) + "\n";
}

Measure Measure::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("measure JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j.contains("components"))
        throw std::runtime_error("measure JSON must be an object with \"type\" and \"components\"");
    const std::string type = j["type"].get<std::string>();
    const auto& comps = j["components"];
    if (!comps.is_array()) throw std::runtime_error("measure JSON \"components\" must be an array");
    if (type == "discrete") {
        DiscreteMeasure d;
        for (const auto& c : comps) {
            const auto& pt = c.at("point");
            d.atoms.push_back({{pt.at(0).get<double>(), pt.at(1).get<double>()}, c.at("mass").get<double>()});
        }
        return Measure(std::move(d));
    }
    if (type == "boxes") {
        BoxMixtureMeasure b;
        for (const auto& c : comps) {
            const auto& bb = c.at("box");
            b.boxes.push_back({bb.at(0).get<double>(), bb.at(1).get<double>(), bb.at(2).get<double>(),
                               bb.at(3).get<double>(), c.at("mass").get<double>()});
        }
        return Measure(std::move(b));
    }
    throw std::runtime_error("measure JSON type must be \"discrete\" or \"boxes\", got \"" + type + "\"");
}

} // namespace brt
