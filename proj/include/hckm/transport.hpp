#pragma once

#include <cstdint>
#include <vector>

#include "hckm/core.hpp"
#include "hckm/metrics.hpp"

namespace hckm {

// Costs are scaled to 64-bit integers by 2^30 with round-half-even before
// solving, so optima compare exactly across formulations.
constexpr double kCostScale = 1073741824.0;  // 2^30

std::int64_t scale_cost(double c);
double unscale_cost(std::int64_t c);

struct AssignmentProblem {
    std::vector<std::int64_t> supplies;
    std::vector<std::int64_t> demands_cap;
    std::vector<std::vector<double>> cost;  // cost[source][sink] per unit
};

struct FlowResult {
    std::vector<std::vector<std::int64_t>> flow;
    std::int64_t total_cost_scaled = 0;
    double total_cost = 0.0;
};

// Minimum-cost integral flow saturating all supplies. Successive shortest
// augmenting paths with potentials on the bipartite network.
FlowResult solve(const AssignmentProblem& problem);

enum class Metric { D, H };

// Centers given as distinct locations with multiplicities; copies at one
// location merge into one sink with capacity multiplicity*u. The returned
// Partition expands merged sinks back into per-copy clusters of size <= u,
// with exactly sum(multiplicity) centers.
struct CenterSet {
    std::vector<Point> locations;
    std::vector<int> multiplicity;

    int total() const;
};

std::pair<Partition, CostReport> assign_points(const Instance& instance,
                                               const CenterSet& centers, Metric metric,
                                               const VoronoiIndex* index = nullptr);

// Region-level transportation in metric H: supplies are per-region counts,
// sinks are representing points with capacity composition[i]*u, unit cost
// d(s_j, s_i). cost_h = voronoi cost + flow cost, in shared scaled
// arithmetic with the point-level formulation.
struct RegionAssignment {
    FlowResult flow;
    std::int64_t cost_h_scaled = 0;
    double cost_h = 0.0;
};

RegionAssignment assign_regions_h(const VoronoiIndex& index,
                                  const std::vector<int>& composition, std::int64_t u);

}  // namespace hckm
