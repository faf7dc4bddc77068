#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brt/biased_range_tree.hpp"

namespace brt {

struct AuditReport {
    bool ok = true;
    long long checks = 0;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        if (failures.size() < 64) failures.push_back(std::move(msg));
    }
    void merge(const AuditReport& other) {
        ok = ok && other.ok;
        checks += other.checks;
        for (const auto& f : other.failures) fail(f);
    }
};

// Structural audits: strip-rule properties (Pr(s) <= Pr(r) <= 2^-depth,
// closure contains a point), depth cap, strip emptiness, child regions,
// unique strip containment, cascade bridges and suffix counts by scan,
// catalogue assignment by definition, and space accounting.
AuditReport audit_structure(const BiasedRangeTree& t);

// Per-query audits against brute force: exact counts, and for catalogue
// paths the above/right, disjointness and coverage properties plus the
// walk's comparison budget.
AuditReport audit_queries(const BiasedRangeTree& t, const std::vector<Point>& queries);

// Half drawn from the structure's measure, half adversarial (exact point
// coordinates, perturbations, extremes).
std::vector<Point> make_audit_queries(const BiasedRangeTree& t, int count, std::uint64_t seed);

} // namespace brt
