#include "hckm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hckm {

double dist_d(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw Error("dimension mismatch in dist_d");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = x[i] - y[i];
        acc += diff * diff;
    }
    return acc;
}

std::pair<int, double> VoronoiIndex::nearest(const Point& q) const {
    if (representing_points.empty()) throw Error("empty representing set");
    int best = 0;
    double best_dist = dist_d(q, representing_points[0]);
    for (std::size_t i = 1; i < representing_points.size(); ++i) {
        const double dd = dist_d(q, representing_points[i]);
        if (dd < best_dist) {
            best_dist = dd;
            best = static_cast<int>(i);
        }
    }
    return {best, best_dist};
}

std::pair<int, double> VoronoiIndex::resolve(const Point& q) const {
    for (std::size_t i = 0; i < representing_points.size(); ++i)
        if (representing_points[i] == q) return {static_cast<int>(i), 0.0};
    for (std::size_t j = 0; j < data_points.size(); ++j)
        if (data_points[j] == q) return {region_of[j], dist_to_region[j]};
    return nearest(q);
}

VoronoiIndex build_voronoi_index(const Instance& instance, const std::vector<Point>& S) {
    if (S.empty()) throw Error("empty representing set");
    VoronoiIndex index;
    index.representing_points = S;
    index.data_points = instance.points;
    index.per_region_count.assign(S.size(), 0);
    index.region_of.reserve(instance.points.size());
    index.dist_to_region.reserve(instance.points.size());
    for (const Point& x : instance.points) {
        auto [region, dd] = index.nearest(x);
        index.region_of.push_back(region);
        index.dist_to_region.push_back(dd);
        ++index.per_region_count[region];
        index.voronoi_cost += dd;
    }
    return index;
}

double dist_h(const Point& x, const Point& y, const VoronoiIndex& index) {
    const auto [rx, dx] = index.resolve(x);
    const auto [ry, dy] = index.resolve(y);
    return dx + dist_d(index.representing_points[rx], index.representing_points[ry]) + dy;
}

namespace {
constexpr double kRelTol = 1e-9;

bool holds_within(double lhs, double rhs) {
    return lhs <= rhs + kRelTol * std::max({std::abs(lhs), std::abs(rhs), 1.0});
}
}  // namespace

bool check_extended_triangle(const Point& i, const Point& j, const Point& k) {
    return holds_within(dist_d(i, j), 2.0 * (dist_d(i, k) + dist_d(j, k)));
}

bool check_four_point(const Point& i, const Point& l, const Point& k, const Point& j) {
    return holds_within(dist_d(i, j), 3.0 * (dist_d(i, l) + dist_d(l, k) + dist_d(k, j)));
}

}  // namespace hckm
