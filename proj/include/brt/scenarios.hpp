#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brt/oracle.hpp"

namespace brt {

// Deterministic dataset/measure generators for the benchmark harness.
//   uniform    points and queries uniform on [0,1]^2
//   clustered  uniform points, query mass in a few small boxes
//   staircase  the lower-bound construction (see staircase_scenario)
//   far_corner all query mass in the ray-free face up-right of every point
//   grid       skewed sqrt(n) x sqrt(n) lattice (distinct coords), uniform queries
Scenario make_scenario(const std::string& name, int n, std::uint64_t seed);

const std::vector<std::string>& scenario_names();

} // namespace brt
