#pragma once

#include <string>
#include <vector>

#include "brt/geometry.hpp"
#include "brt/measure.hpp"

namespace brt {

// Points file: CSV with header "x,y", one point per row, decimal floats.
std::vector<Point> read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const std::vector<Point>& pts);

Measure read_measure_json(const std::string& path);
void write_measure_json(const std::string& path, const Measure& m);

} // namespace brt
