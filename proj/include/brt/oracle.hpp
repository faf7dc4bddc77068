#pragma once

#include <vector>

#include "brt/geometry.hpp"
#include "brt/measure.hpp"

namespace brt {

// Ground truth for every counting structure in the repo.
int brute_count(const std::vector<Point>& points, const Point& q);

// The arrangement of 2n rays (one leftward, one downward per point) cut
// along the grid of all distinct x/y values of points and atoms. Faces are
// unions of grid cells connected without crossing a ray; the dominance count
// is constant on each face.
class GridDecomposition {
public:
    static GridDecomposition build(const std::vector<Point>& points, const DiscreteMeasure& m);

    int cols() const { return cols_; }
    int rows() const { return rows_; }
    int face_of_cell(int col, int row) const;
    int face_of_point(const Point& p) const; // p must avoid all grid lines of points
    int dominance_of_cell(int col, int row) const;

private:
    std::vector<double> xs_, ys_;
    std::vector<int> face_;
    std::vector<int> dom_;
    int cols_ = 1, rows_ = 1;
};

// Exact minimum expected comparison count over all comparison trees for
// 2-sided range counting over `points`, evaluated under the atom measure.
// Cuts may be placed at midpoints between adjacent grid values; with no
// coordinate shared between any two of points ∪ atoms this loses nothing.
// cost(R) = 0 when R's interior meets no ray or Pr(R) = 0, else
// Pr(R) + min over cuts of the two subproblems. Tiny instances only
// (points <= 6, atoms <= 12).
double optimal_expected_cost(const std::vector<Point>& points, const DiscreteMeasure& m);

// Shannon bound over the faces of the arrangement: sum Pr(f) log2(1/Pr(f)).
// A valid but weak lower bound on any comparison tree.
double face_entropy(const std::vector<Point>& points, const DiscreteMeasure& m);

struct Scenario {
    std::vector<Point> points;
    Measure measure;
};

// n descending points (i, n+1-i) with n+1 equal-mass atoms nestled in the
// staircase notches: all atoms share one face (face entropy 0) yet any
// comparison tree must tell them apart, so the optimum is >= log2(n+1).
Scenario staircase_scenario(int n);

} // namespace brt
