#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hckm {

using Point = std::vector<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when k > n or k*u < n; the message is exactly "Infeasible instance".
struct InfeasibleError : Error {
    InfeasibleError() : Error("Infeasible instance") {}
};

// A hard-capacitated k-means instance: n points, k clusters, uniform
// cluster capacity u.
struct Instance {
    std::vector<Point> points;
    int k = 1;
    std::int64_t u = 1;

    int n() const { return static_cast<int>(points.size()); }
    int dim() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }

    // Checks coordinate finiteness, dimension consistency and k, u >= 1.
    void validate() const;
};

// labels[j] in [0, k) gives the cluster of point j; centers has length k.
// Empty clusters are allowed.
struct Partition {
    std::vector<int> labels;
    std::vector<Point> centers;
};

struct CostReport {
    double cost_d = 0.0;
    std::optional<double> cost_h;
};

bool check_feasibility(const Instance& instance);

Point centroid(const std::vector<Point>& cluster);

// Sum over points of squared distance to their cluster center.
double evaluate_cost_d(const Instance& instance, const Partition& partition);

// Cluster sizes of a partition; throws on out-of-range labels.
std::vector<std::int64_t> cluster_sizes(const Partition& partition, int n_points);

}  // namespace hckm
