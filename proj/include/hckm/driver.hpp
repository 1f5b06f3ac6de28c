#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "hckm/core.hpp"
#include "hckm/enumeration.hpp"
#include "hckm/metrics.hpp"
#include "hckm/subroutine.hpp"
#include "hckm/transport.hpp"

namespace hckm {

struct DriverOptions {
    int workers = 1;
    bool prune = true;  // per-slot cap min(k, ceil(n/u)) on compositions
    std::string subroutine = "d2-lloyd";
    // Progress callback period in compositions; 0 disables.
    std::uint64_t progress_every = 0;
    std::function<void(std::uint64_t done, std::uint64_t total)> on_progress;
    const std::atomic<bool>* cancel = nullptr;
};

struct SubroutineStats {
    int set_size = 0;
    double voronoi_cost = 0.0;
    std::uint64_t seed = 0;
};

struct Solution {
    Partition partition;
    CostReport cost_before_recenter;
    CostReport cost_after_recenter;
    Composition winning_composition;
    std::uint64_t compositions_evaluated = 0;
    SubroutineStats subroutine_stats;
    double wall_time_ms = 0.0;
    bool complete = true;  // false only when cancelled mid-sweep
};

// Algorithm: feasibility gate, representing-set subroutine, composition
// sweep with region-level assignment in metric H, argmin (ties to the
// lexicographically smallest composition), point-level partition of the
// winner, recentering.
Solution solve_hckm(const Instance& instance, const SubroutineConfig& config,
                    const DriverOptions& options = {});

// 3 * lambda2 * (11 + 12 * lambda1).
double ratio_bound(double lambda1, double lambda2);

struct SandwichReport {
    double cost_d = 0.0;
    double cost_h = 0.0;
    double slack = 0.0;  // 3*cost_h - cost_d, nonnegative
    bool holds = false;
};

// Evaluates a fixed assignment under both metrics and checks
// cost_d <= 3 * cost_h.
SandwichReport verify_sandwich(const Instance& instance, const VoronoiIndex& index,
                               const Partition& partition);

}  // namespace hckm
