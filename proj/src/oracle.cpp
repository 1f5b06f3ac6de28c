#include "hckm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hckm {

namespace {

struct PartitionSearch {
    const Instance& instance;
    std::int64_t cap;  // per-part size bound; n for uncapacitated
    int max_parts;
    std::vector<int> labels;
    std::vector<std::int64_t> part_sizes;
    int parts_used = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best_labels;
    std::uint64_t nodes = 0;

    explicit PartitionSearch(const Instance& inst, std::int64_t cap_, int max_parts_)
        : instance(inst), cap(cap_), max_parts(max_parts_), labels(inst.n(), -1),
          part_sizes(max_parts_, 0) {}

    double leaf_cost() const {
        double total = 0.0;
        for (int p = 0; p < parts_used; ++p) {
            std::vector<const Point*> members;
            for (int j = 0; j < instance.n(); ++j)
                if (labels[j] == p) members.push_back(&instance.points[j]);
            if (members.empty()) continue;
            Point ctr(instance.dim(), 0.0);
            for (const Point* x : members)
                for (int c = 0; c < instance.dim(); ++c) ctr[c] += (*x)[c];
            for (double& v : ctr) v /= static_cast<double>(members.size());
            for (const Point* x : members)
                for (int c = 0; c < instance.dim(); ++c) {
                    const double diff = (*x)[c] - ctr[c];
                    total += diff * diff;
                }
        }
        return total;
    }

    void recurse(int j) {
        ++nodes;
        if (j == instance.n()) {
            const double cost = leaf_cost();
            if (cost < best_cost) {
                best_cost = cost;
                best_labels = labels;
            }
            return;
        }
        // Remaining points must fit in the remaining capacity.
        std::int64_t free_cap = 0;
        for (int p = 0; p < parts_used; ++p) free_cap += cap - part_sizes[p];
        free_cap += static_cast<std::int64_t>(max_parts - parts_used) * cap;
        if (free_cap < instance.n() - j) return;

        for (int p = 0; p < parts_used; ++p) {
            if (part_sizes[p] >= cap) continue;
            labels[j] = p;
            ++part_sizes[p];
            recurse(j + 1);
            --part_sizes[p];
        }
        if (parts_used < max_parts) {
            labels[j] = parts_used;
            ++part_sizes[parts_used];
            ++parts_used;
            recurse(j + 1);
            --parts_used;
            --part_sizes[parts_used];
        }
        labels[j] = -1;
    }
};

OracleResult exact_partition_search(const Instance& instance, bool capacitated) {
    instance.validate();
    if (instance.n() > 10) throw Error("oracle guarded to n <= 10");
    if (capacitated && !check_feasibility(instance)) throw InfeasibleError();

    const std::int64_t cap = capacitated ? instance.u : instance.n();
    PartitionSearch search(instance, cap, std::min(instance.k, instance.n()));
    search.recurse(0);

    OracleResult result;
    result.opt_cost = search.best_cost;
    result.nodes_explored = search.nodes;
    result.opt_partition.labels = search.best_labels;
    // Rebuild centroids; pad unused clusters up to k with the global mean.
    int parts = 0;
    for (int label : search.best_labels) parts = std::max(parts, label + 1);
    for (int p = 0; p < parts; ++p) {
        std::vector<Point> members;
        for (int j = 0; j < instance.n(); ++j)
            if (search.best_labels[j] == p) members.push_back(instance.points[j]);
        result.opt_partition.centers.push_back(centroid(members));
    }
    const Point global = centroid(instance.points);
    while (static_cast<int>(result.opt_partition.centers.size()) < instance.k)
        result.opt_partition.centers.push_back(global);
    return result;
}

}  // namespace

OracleResult exact_hckm(const Instance& instance) {
    return exact_partition_search(instance, /*capacitated=*/true);
}

OracleResult exact_km(const Instance& instance) {
    return exact_partition_search(instance, /*capacitated=*/false);
}

OracleResult exact_assignment(const Instance& instance, const std::vector<Point>& centers,
                              std::int64_t u, Metric metric, const VoronoiIndex* index) {
    instance.validate();
    if (centers.empty()) throw Error("no centers");
    if (metric == Metric::H && index == nullptr) throw Error("metric H requires a Voronoi index");
    const int n = instance.n();
    const int kc = static_cast<int>(centers.size());
    if (std::pow(static_cast<double>(kc), n) > 1e6)
        throw Error("oracle guarded to centers^n <= 1e6");

    // Scaled per-term cost table mirrors the transportation module exactly.
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(kc));
    for (int b = 0; b < kc; ++b) {
        int region = -1;
        std::int64_t snap = 0;
        if (metric == Metric::H) {
            auto [r, dd] = index->resolve(centers[b]);
            region = r;
            snap = scale_cost(dd);
        }
        for (int j = 0; j < n; ++j) {
            if (metric == Metric::D) {
                cost[j][b] = scale_cost(dist_d(instance.points[j], centers[b]));
            } else {
                const int rj = index->region_of[j];
                cost[j][b] = scale_cost(index->dist_to_region[j]) +
                             scale_cost(dist_d(index->representing_points[rj],
                                               index->representing_points[region])) +
                             snap;
            }
        }
    }

    std::vector<int> labels(n, 0), best_labels;
    std::vector<std::int64_t> sizes(kc, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::uint64_t nodes = 0;
    auto recurse = [&](auto&& self, int j, std::int64_t acc) -> void {
        ++nodes;
        if (j == n) {
            if (acc < best) {
                best = acc;
                best_labels = labels;
            }
            return;
        }
        for (int b = 0; b < kc; ++b) {
            if (sizes[b] >= u) continue;
            labels[j] = b;
            ++sizes[b];
            self(self, j + 1, acc + cost[j][b]);
            --sizes[b];
        }
    };
    recurse(recurse, 0, 0);
    if (best_labels.empty()) throw Error("no capacity-feasible labeling exists");

    OracleResult result;
    result.opt_cost = unscale_cost(best);
    result.nodes_explored = nodes;
    result.opt_partition.labels = best_labels;
    result.opt_partition.centers = centers;
    return result;
}

std::int64_t exact_assignment_scaled(const AssignmentProblem& problem) {
    const int nt = static_cast<int>(problem.demands_cap.size());
    std::int64_t units = 0;
    for (std::int64_t s : problem.supplies) units += s;
    if (std::pow(static_cast<double>(nt), static_cast<double>(units)) > 1e6)
        throw Error("oracle guarded to sinks^units <= 1e6");

    // One row of scaled costs per supply unit.
    std::vector<std::vector<std::int64_t>> unit_cost;
    for (std::size_t a = 0; a < problem.supplies.size(); ++a) {
        std::vector<std::int64_t> row(nt);
        for (int b = 0; b < nt; ++b) row[b] = scale_cost(problem.cost[a][b]);
        for (std::int64_t s = 0; s < problem.supplies[a]; ++s) unit_cost.push_back(row);
    }

    std::vector<std::int64_t> used(nt, 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    auto recurse = [&](auto&& self, std::size_t j, std::int64_t acc) -> void {
        if (j == unit_cost.size()) {
            best = std::min(best, acc);
            return;
        }
        for (int b = 0; b < nt; ++b) {
            if (used[b] >= problem.demands_cap[b]) continue;
            ++used[b];
            self(self, j + 1, acc + unit_cost[j][b]);
            --used[b];
        }
    };
    recurse(recurse, 0, 0);
    if (best == std::numeric_limits<std::int64_t>::max())
        throw Error("infeasible: total supply exceeds total capacity");
    return best;
}

}  // namespace hckm
