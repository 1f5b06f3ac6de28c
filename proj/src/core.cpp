#include "hckm/core.hpp"

#include <cmath>

namespace hckm {

void Instance::validate() const {
    if (points.empty()) throw Error("instance has no points");
    if (k < 1) throw Error("k must be >= 1");
    if (u < 1) throw Error("u must be >= 1");
    const auto d = points.front().size();
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (points[j].size() != d)
            throw Error("dimension mismatch at point " + std::to_string(j));
        for (double c : points[j])
            if (!std::isfinite(c))
                throw Error("non-finite coordinate at point " + std::to_string(j));
    }
}

bool check_feasibility(const Instance& instance) {
    const std::int64_t n = instance.n();
    // Integer form of the gate "k > n or u < n/k".
    if (instance.k > n) return false;
    return static_cast<std::int64_t>(instance.k) * instance.u >= n;
}

Point centroid(const std::vector<Point>& cluster) {
    if (cluster.empty()) throw Error("empty cluster has no centroid");
    Point out(cluster.front().size(), 0.0);
    for (const Point& x : cluster) {
        if (x.size() != out.size()) throw Error("dimension mismatch in cluster");
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[i];
    }
    for (double& c : out) c /= static_cast<double>(cluster.size());
    return out;
}

double evaluate_cost_d(const Instance& instance, const Partition& partition) {
    if (partition.labels.size() != instance.points.size())
        throw Error("label count does not match point count");
    double total = 0.0;
    for (std::size_t j = 0; j < instance.points.size(); ++j) {
        const int c = partition.labels[j];
        if (c < 0 || c >= static_cast<int>(partition.centers.size()))
            throw Error("label out of range");
        const Point& x = instance.points[j];
        const Point& ctr = partition.centers[c];
        if (x.size() != ctr.size()) throw Error("dimension mismatch");
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double diff = x[i] - ctr[i];
            total += diff * diff;
        }
    }
    return total;
}

std::vector<std::int64_t> cluster_sizes(const Partition& partition, int n_points) {
    std::vector<std::int64_t> sizes(partition.centers.size(), 0);
    if (static_cast<int>(partition.labels.size()) != n_points)
        throw Error("label count does not match point count");
    for (int label : partition.labels) {
        if (label < 0 || label >= static_cast<int>(sizes.size()))
            throw Error("label out of range");
        ++sizes[label];
    }
    return sizes;
}

}  // namespace hckm
