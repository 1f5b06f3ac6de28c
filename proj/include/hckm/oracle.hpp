#pragma once

#include <cstdint>
#include <vector>

#include "hckm/core.hpp"
#include "hckm/metrics.hpp"
#include "hckm/transport.hpp"

namespace hckm {

struct OracleResult {
    double opt_cost = 0.0;
    Partition opt_partition;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive capacitated k-means optimum via restricted set-partition
// search. Guarded to n <= 10.
OracleResult exact_hckm(const Instance& instance);

// Same search without the capacity constraint (uncapacitated optimum).
OracleResult exact_km(const Instance& instance);

// Exhaustive optimal assignment of points to fixed centers under capacity
// u, in metric D or H. Guarded to (#centers)^n <= 10^6.
OracleResult exact_assignment(const Instance& instance, const std::vector<Point>& centers,
                              std::int64_t u, Metric metric,
                              const VoronoiIndex* index = nullptr);

// Exhaustive optimum of a raw transportation problem in the shared scaled
// arithmetic; certifies transport::solve. Guarded to sinks^units <= 10^6.
std::int64_t exact_assignment_scaled(const AssignmentProblem& problem);

}  // namespace hckm
