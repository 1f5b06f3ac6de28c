#pragma once

#include <utility>
#include <vector>

#include "hckm/core.hpp"

namespace hckm {

// Squared Euclidean distance.
double dist_d(const Point& x, const Point& y);

// Voronoi structure of the data set with respect to a representing set S.
// Immutable after build; all queries are const.
struct VoronoiIndex {
    std::vector<Point> representing_points;  // S
    std::vector<Point> data_points;          // X, in instance order
    std::vector<int> region_of;              // per data point, index into S
    std::vector<double> dist_to_region;      // per data point, d(x, pi_vor(x))
    std::vector<std::int64_t> per_region_count;
    double voronoi_cost = 0.0;  // sum of dist_to_region

    // Nearest representing point of an arbitrary query, brute force over S,
    // ties to the lowest index. Returns (index, squared distance).
    std::pair<int, double> nearest(const Point& q) const;

    // Resolves q through the precomputed table when q is an indexed data
    // point or a member of S; falls back to brute force otherwise.
    std::pair<int, double> resolve(const Point& q) const;
};

VoronoiIndex build_voronoi_index(const Instance& instance, const std::vector<Point>& S);

// h(x,y) = d(x,pi(x)) + d(pi(x),pi(y)) + d(pi(y),y).
double dist_h(const Point& x, const Point& y, const VoronoiIndex& index);

// d(i,j) <= 2(d(i,k) + d(j,k)), within relative tolerance 1e-9.
bool check_extended_triangle(const Point& i, const Point& j, const Point& k);

// d(i,j) <= 3(d(i,l) + d(l,k) + d(k,j)), within relative tolerance 1e-9.
bool check_four_point(const Point& i, const Point& l, const Point& k, const Point& j);

}  // namespace hckm
